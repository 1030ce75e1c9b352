//! JSON file formats for structures and linear maps. Indices are 1-based.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Hopf, Meta};
use crate::linalg::Matrix;
use crate::scalars::{Conductor, ScalarText};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct HopfFile {
    dim: usize,
    conductor: u32,
    mul: Vec<(usize, usize, usize, String)>,
    comul: Vec<(usize, usize, usize, String)>,
    counit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<(usize, usize, String)>>,
    #[serde(default)]
    meta: Meta,
}

#[derive(Serialize, Deserialize)]
struct MapFile {
    dim: usize,
    conductor: u32,
    entries: Vec<(usize, usize, String)>,
}

/// Pretty-prints a flat object, putting each element of an array of arrays on
/// its own line and everything else inline.
fn tabular_json(value: &serde_json::Value) -> String {
    let compact = |v: &serde_json::Value| serde_json::to_string(v).expect("json value serializes");
    let Some(obj) = value.as_object() else {
        return compact(value);
    };
    let fields: Vec<String> = obj
        .iter()
        .map(|(k, v)| {
            let body = match v.as_array() {
                Some(items) if !items.is_empty() && items.iter().all(|x| x.is_array()) => {
                    let rows: Vec<String> = items.iter().map(|x| format!("    {}", compact(x))).collect();
                    format!("[\n{}\n  ]", rows.join(",\n"))
                }
                _ => compact(v),
            };
            format!("  {}: {body}", compact(&serde_json::Value::from(k.as_str())))
        })
        .collect();
    format!("{{\n{}\n}}", fields.join(",\n"))
}

fn zero_based(idx: usize, dim: usize) -> Result<usize> {
    if idx == 0 || idx > dim {
        return Err(Error::Index(format!("index {idx} outside 1..={dim}")));
    }
    Ok(idx - 1)
}

fn matrix_entries<F: ScalarText>(m: &Matrix<F>) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if !v.is_zero() {
                out.push((i + 1, j + 1, v.to_text()));
            }
        }
    }
    out
}

fn matrix_from_entries<F: ScalarText>(dim: usize, c: Conductor, entries: &[(usize, usize, String)]) -> Result<Matrix<F>> {
    let mut m = Matrix::<F>::zeros(c, dim, dim);
    for (i, j, s) in entries {
        let (i, j) = (zero_based(*i, dim)?, zero_based(*j, dim)?);
        let v = F::parse_text(s, c)?;
        let cur = m.get(i, j).add_ref(&v);
        m.set(i, j, cur);
    }
    Ok(m)
}

impl<F: ScalarText> Hopf<F> {
    pub fn to_json_value(&self) -> serde_json::Value {
        let file = HopfFile {
            dim: self.dim(),
            conductor: self.conductor().m(),
            mul: self
                .mul_entries()
                .map(|(i, j, k, v)| (i + 1, j + 1, k + 1, v.to_text()))
                .collect(),
            comul: self
                .comul_entries()
                .map(|(i, j, k, v)| (i + 1, j + 1, k + 1, v.to_text()))
                .collect(),
            counit: self.counit().iter().map(F::to_text).collect(),
            antipode: self.antipode().map(matrix_entries),
            meta: self.meta.clone(),
        };
        serde_json::to_value(file).expect("structure serializes")
    }

    /// File text: one field per line, one coordinate tuple per line.
    pub fn to_json_string(&self) -> String {
        tabular_json(&self.to_json_value())
    }

    pub fn from_json_value(value: serde_json::Value) -> Result<Self> {
        let file: HopfFile = serde_json::from_value(value)?;
        let c = Conductor::try_new(file.conductor)?;
        let n = file.dim;
        let triple = |(i, j, k, s): &(usize, usize, usize, String)| -> Result<(usize, usize, usize, F)> {
            Ok((zero_based(*i, n)?, zero_based(*j, n)?, zero_based(*k, n)?, F::parse_text(s, c)?))
        };
        let mul = file.mul.iter().map(triple).collect::<Result<Vec<_>>>()?;
        let comul = file.comul.iter().map(triple).collect::<Result<Vec<_>>>()?;
        let counit = file
            .counit
            .iter()
            .map(|s| F::parse_text(s, c))
            .collect::<Result<Vec<_>>>()?;
        let antipode = match &file.antipode {
            Some(entries) => Some(matrix_from_entries(n, c, entries)?),
            None => None,
        };
        Ok(Hopf::from_parts(c, n, mul, comul, counit, antipode)?.with_meta(file.meta))
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json_value(serde_json::from_str(text)?)
    }
}

impl<F: ScalarText> Serialize for Hopf<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

pub fn read_hopf<F: ScalarText>(path: impl AsRef<Path>) -> Result<Hopf<F>> {
    Hopf::from_json_str(&std::fs::read_to_string(path)?)
}

pub fn write_hopf<F: ScalarText>(h: &Hopf<F>, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, h.to_json_string() + "\n")?;
    Ok(())
}

pub fn map_to_json<F: ScalarText>(m: &Matrix<F>) -> serde_json::Value {
    assert!(m.is_square());
    let file = MapFile {
        dim: m.rows(),
        conductor: m.conductor().m(),
        entries: matrix_entries(m),
    };
    serde_json::to_value(file).expect("map serializes")
}

pub fn map_from_json<F: ScalarText>(value: serde_json::Value) -> Result<Matrix<F>> {
    let file: MapFile = serde_json::from_value(value)?;
    let c = Conductor::try_new(file.conductor)?;
    matrix_from_entries(file.dim, c, &file.entries)
}

pub fn read_map<F: ScalarText>(path: impl AsRef<Path>) -> Result<Matrix<F>> {
    map_from_json(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

pub fn write_map<F: ScalarText>(m: &Matrix<F>, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, tabular_json(&map_to_json(m)) + "\n")?;
    Ok(())
}
