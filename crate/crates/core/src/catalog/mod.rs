//! Registry of explicitly presented Hopf algebras and one-parameter families.

mod builders;
mod groups;

use serde::Serialize;
use serde_json::json;

pub use builders::{group_algebra, taft, x2_family};
pub use groups::GroupTable;

use crate::hopf::Meta;
use crate::scalars::{Conductor, CycScalar, RatFunc};
use crate::{Error, FamilyData, HopfData, Result};

/// How a catalog entry is built.
#[derive(Clone, Copy, Debug)]
enum Recipe {
    Cyclic(usize),
    Abelian(&'static [usize]),
    Dihedral(usize),
    Quaternion,
    Alternating4,
    Taft(u32),
    X2(usize, i64),
    Dual(&'static str),
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    id: &'static str,
    name: &'static str,
    aliases: &'static [&'static str],
    recipe: Recipe,
    semisimple: bool,
    rigid: bool,
    note: Option<&'static str>,
}

const fn entry(id: &'static str, name: &'static str, recipe: Recipe, semisimple: bool, rigid: bool) -> Entry {
    Entry {
        id,
        name,
        aliases: &[],
        recipe,
        semisimple,
        rigid,
        note: None,
    }
}

const CYCLIC_IDS: [&str; 12] = [
    "KZ_2", "KZ_3", "KZ_4", "KZ_5", "KZ_6", "KZ_7", "KZ_8", "KZ_9", "KZ_10", "KZ_11", "KZ_12", "KZ_13",
];

fn entries() -> Vec<Entry> {
    let mut out: Vec<Entry> = CYCLIC_IDS
        .iter()
        .enumerate()
        .map(|(i, id)| entry(id, id, Recipe::Cyclic(i + 2), true, true))
        .collect();
    out.extend([
        entry("KZ2xZ2", "K(Z_2×Z_2)", Recipe::Abelian(&[2, 2]), true, true),
        entry("KZ3xZ3", "K(Z_3×Z_3)", Recipe::Abelian(&[3, 3]), true, true),
        entry("KZ2xZ4", "K(Z_2×Z_4)", Recipe::Abelian(&[2, 4]), true, true),
        entry("KZ2xZ2xZ2", "K(Z_2×Z_2×Z_2)", Recipe::Abelian(&[2, 2, 2]), true, true),
        entry("KZ6xZ2", "K(Z_6×Z_2)", Recipe::Abelian(&[6, 2]), true, true),
        Entry {
            note: Some("Z_4×Z_3 is cyclic of order 12, so this entry is isomorphic to KZ_12"),
            ..entry("KZ4xZ3", "K(Z_4×Z_3)", Recipe::Abelian(&[4, 3]), true, true)
        },
        Entry {
            aliases: &["KD_3"],
            ..entry("KS_3", "KS_3", Recipe::Dihedral(3), true, true)
        },
        entry("KD_4", "KD_4", Recipe::Dihedral(4), true, true),
        entry("KD_5", "KD_5", Recipe::Dihedral(5), true, true),
        entry("KD_6", "KD_6", Recipe::Dihedral(6), true, true),
        Entry {
            aliases: &["KH_4"],
            ..entry("KQ_8", "KH_4 (quaternion group)", Recipe::Quaternion, true, true)
        },
        entry("KA_4", "KAl_4", Recipe::Alternating4, true, true),
        Entry {
            aliases: &["KD_3_dual"],
            ..entry("KS_3_dual", "(KS_3)*", Recipe::Dual("KS_3"), true, true)
        },
        entry("KD_4_dual", "(KD_4)*", Recipe::Dual("KD_4"), true, true),
        entry("KD_5_dual", "(KD_5)*", Recipe::Dual("KD_5"), true, true),
        entry("KD_6_dual", "(KD_6)*", Recipe::Dual("KD_6"), true, true),
        Entry {
            aliases: &["KH_4_dual"],
            ..entry("KQ_8_dual", "(KH_4)*", Recipe::Dual("KQ_8"), true, true)
        },
        entry("KA_4_dual", "(KAl_4)*", Recipe::Dual("KA_4"), true, true),
        Entry {
            aliases: &["taft_2"],
            ..entry("T_4", "T_4 (Sweedler algebra)", Recipe::Taft(2), false, true)
        },
        Entry {
            aliases: &["taft_3"],
            ..entry("T_9", "T_9", Recipe::Taft(3), false, true)
        },
        Entry {
            aliases: &["H_0"],
            ..entry("Aprime_C4", "A'_{C4}", Recipe::X2(4, 0), false, false)
        },
        Entry {
            aliases: &["H_1"],
            ..entry("Adprime_C4", "A''_{C4}", Recipe::X2(4, 1), false, true)
        },
        entry("A_0", "A_0", Recipe::X2(6, 0), false, false),
        entry("A_1", "A_1", Recipe::X2(6, 1), false, true),
        Entry {
            aliases: &["Astar_0"],
            ..entry("B_1", "B_1 ≅ A_0*", Recipe::Dual("A_0"), false, false)
        },
        entry("Astar_1", "A_1*", Recipe::Dual("A_1"), false, true),
    ]);
    out
}

/// Summary of a catalog entry.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CatalogInfo {
    pub id: &'static str,
    pub name: &'static str,
    pub dim: usize,
    pub conductor: u32,
    pub semisimple: bool,
    pub rigid: bool,
    pub aliases: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

fn recipe_dim(r: Recipe) -> usize {
    match r {
        Recipe::Cyclic(n) => n,
        Recipe::Abelian(orders) => orders.iter().product(),
        Recipe::Dihedral(n) => 2 * n,
        Recipe::Quaternion => 8,
        Recipe::Alternating4 => 12,
        Recipe::Taft(p) => (p * p) as usize,
        Recipe::X2(n, _) => 2 * n,
        Recipe::Dual(id) => recipe_dim(find_entry(id).expect("dual of a known entry").recipe),
    }
}

fn recipe_conductor(r: Recipe) -> u32 {
    match r {
        Recipe::Taft(p) => p,
        Recipe::Dual(id) => recipe_conductor(find_entry(id).expect("dual of a known entry").recipe),
        _ => 1,
    }
}

fn find_entry(id: &str) -> Option<Entry> {
    entries().into_iter().find(|s| s.id == id || s.aliases.contains(&id))
}

fn info(s: &Entry) -> CatalogInfo {
    CatalogInfo {
        id: s.id,
        name: s.name,
        dim: recipe_dim(s.recipe),
        conductor: recipe_conductor(s.recipe),
        semisimple: s.semisimple,
        rigid: s.rigid,
        aliases: s.aliases.to_vec(),
        note: s.note,
    }
}

/// All entries in registry order.
pub fn catalog_list() -> Vec<CatalogInfo> {
    entries().iter().map(info).collect()
}

pub fn catalog_ids() -> Vec<&'static str> {
    entries().iter().map(|s| s.id).collect()
}

fn meta_for(s: &Entry) -> Meta {
    let mut m = Meta::new();
    m.insert("id".into(), json!(s.id));
    m.insert("name".into(), json!(s.name));
    m.insert("semisimple".into(), json!(s.semisimple));
    m.insert("rigid".into(), json!(s.rigid));
    if let Some(note) = s.note {
        m.insert("note".into(), json!(note));
    }
    m
}

/// Builds a catalog entry by id or alias.
pub fn catalog_get(id: &str) -> Result<HopfData> {
    let s = find_entry(id).ok_or_else(|| Error::UnknownCatalogId(id.to_string()))?;
    let h = match s.recipe {
        Recipe::Cyclic(n) => group_algebra(&GroupTable::cyclic(n)),
        Recipe::Abelian(orders) => group_algebra(&GroupTable::abelian(orders)),
        Recipe::Dihedral(n) => group_algebra(&GroupTable::dihedral(n)),
        Recipe::Quaternion => group_algebra(&GroupTable::quaternion()),
        Recipe::Alternating4 => group_algebra(&GroupTable::alternating4()),
        Recipe::Taft(p) => taft(p)?,
        Recipe::X2(n, a) => x2_family(n, &CycScalar::from_int(Conductor::new(1), a))?,
        Recipe::Dual(of) => catalog_get(of)?.dual()?,
    };
    Ok(h.with_meta(meta_for(&s)))
}

/// One-parameter families with the parameter `t`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FamilyInfo {
    pub id: &'static str,
    pub dim: usize,
    pub description: &'static str,
}

pub fn family_list() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            id: "H_t",
            dim: 8,
            description: "x² = t(g² − 1), g⁴ = 1; isomorphic to A''_{C4} for t ≠ 0, tends to A'_{C4}",
        },
        FamilyInfo {
            id: "A_t",
            dim: 12,
            description: "x² = t(1 − g²), g⁶ = 1; isomorphic to A_1 for t ≠ 0, tends to A_0",
        },
        FamilyInfo {
            id: "A_t_dual",
            dim: 12,
            description: "entry-wise dual of A_t; isomorphic to A_1* for t ≠ 0, tends to B_1",
        },
    ]
}

pub fn family_get(id: &str) -> Result<FamilyData> {
    let c = Conductor::new(1);
    let t = RatFunc::t(c);
    let mut meta = Meta::new();
    meta.insert("id".into(), json!(id));
    let h = match id {
        "H_t" => x2_family(4, &t)?,
        "A_t" => x2_family(6, &t)?,
        "A_t_dual" => x2_family(6, &t)?.dual()?,
        _ => return Err(Error::UnknownCatalogId(id.to_string())),
    };
    Ok(h.with_meta(meta))
}
