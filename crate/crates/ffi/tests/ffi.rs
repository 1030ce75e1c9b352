use std::ffi::{CStr, CString};
use std::ptr;

use hopfforge_ffi::*;

fn get(id: &str) -> *mut HfHopf {
    let id = CString::new(id).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { hf_catalog_get(id.as_ptr(), &mut h) }, HfStatus::Ok);
    h
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { hf_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hf_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn json_round_trip_and_verify() {
    let h = get("T_9");
    assert_eq!(unsafe { hf_hopf_dim(h) }, 9);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { hf_hopf_to_json(h, &mut json) }, HfStatus::Ok);
    let text = CString::new(take(json)).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { hf_hopf_from_json(text.as_ptr(), &mut back) }, HfStatus::Ok);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { hf_verify(back, &mut report) }, HfStatus::Ok);
    assert!(take(report).contains("\"failure_count\":0"));
    unsafe {
        hf_hopf_free(h);
        hf_hopf_free(back);
    }
}

#[test]
fn dual_fingerprint_and_orbit() {
    let h = get("KS_3");
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { hf_dual(h, &mut d) }, HfStatus::Ok);
    assert_eq!(unsafe { hf_verify(d, ptr::null_mut()) }, HfStatus::Ok);
    let mut fp = ptr::null_mut();
    assert_eq!(unsafe { hf_fingerprint_json(d, &mut fp) }, HfStatus::Ok);
    let fp: serde_json::Value = serde_json::from_str(&take(fp)).unwrap();
    assert_eq!(fp["grouplike_count"], 2);
    let mut orbit = 0usize;
    assert_eq!(unsafe { hf_orbit_dimension(h, &mut orbit) }, HfStatus::Ok);
    assert_eq!(orbit, 36);
    unsafe {
        hf_hopf_free(h);
        hf_hopf_free(d);
    }
}

#[test]
fn degenerations() {
    let h = get("Adprime_C4");
    let entries: Vec<_> = (1..=4).map(|i| serde_json::json!([i, i, "1"])).collect();
    let phi = CString::new(serde_json::json!({"dim": 8, "conductor": 1, "entries": entries}).to_string()).unwrap();
    let mut limit = ptr::null_mut();
    let mut report = ptr::null_mut();
    let status = unsafe { hf_degenerate(h, phi.as_ptr(), HfMode::Symbolic, &mut limit, &mut report) };
    assert_eq!(status, HfStatus::Ok);
    assert!(take(report).contains("\"unit_found\":true"));
    assert_eq!(unsafe { hf_hopf_dim(limit) }, 8);

    let degrees = [0usize, 0, 0, 0, 1, 1, 1, 1];
    let mut graded = ptr::null_mut();
    let status = unsafe { hf_graded(h, degrees.as_ptr(), degrees.len(), &mut graded, ptr::null_mut()) };
    assert_eq!(status, HfStatus::Ok);
    assert_eq!(unsafe { hf_hopf_dim(graded) }, 8);

    let t = get("T_4");
    let zero = CString::new(r#"{"dim": 4, "conductor": 2, "entries": []}"#).unwrap();
    let mut none = ptr::null_mut();
    let status = unsafe { hf_degenerate(t, zero.as_ptr(), HfMode::ClosedForm, &mut none, ptr::null_mut()) };
    assert_eq!(status, HfStatus::Negative);
    assert!(none.is_null());
    unsafe {
        for p in [h, limit, graded, t] {
            hf_hopf_free(p);
        }
    }
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    let bad = CString::new("{not json").unwrap();
    assert_eq!(unsafe { hf_hopf_from_json(bad.as_ptr(), &mut h) }, HfStatus::ParseError);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { hf_hopf_from_json(ptr::null(), &mut h) }, HfStatus::NullPointer);
    let id = CString::new("nope").unwrap();
    assert_eq!(unsafe { hf_catalog_get(id.as_ptr(), &mut h) }, HfStatus::InvalidArgument);
    assert!(last_error().contains("nope"));
    assert_eq!(unsafe { hf_hopf_dim(ptr::null()) }, 0);
    assert_eq!(unsafe { hf_verify(ptr::null(), ptr::null_mut()) }, HfStatus::NullPointer);
    unsafe {
        hf_hopf_free(ptr::null_mut());
        hf_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/hopfforge.h");
    for name in [
        "hf_hopf_from_json",
        "hf_catalog_get",
        "hf_hopf_free",
        "hf_hopf_to_json",
        "hf_string_free",
        "hf_hopf_dim",
        "hf_verify",
        "hf_dual",
        "hf_fingerprint_json",
        "hf_orbit_dimension",
        "hf_degenerate",
        "hf_graded",
        "hf_last_error_message",
        "typedef struct HfHopf HfHopf",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
