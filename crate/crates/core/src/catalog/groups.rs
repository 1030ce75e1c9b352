//! Finite groups as multiplication tables.

use std::collections::HashMap;
use std::hash::Hash;

use crate::{Error, Result};

/// A finite group by its Cayley table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    product: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Validates a 0-based table: identity at 0, Latin square, associative.
    pub fn new(product: Vec<Vec<usize>>) -> Result<Self> {
        let n = product.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        for (a, row) in product.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroupTable(format!("row {} has length {}", a + 1, row.len())));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidGroupTable(format!("row {} is not a permutation", a + 1)));
                }
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for row in &product {
                if std::mem::replace(&mut seen[row[b]], true) {
                    return Err(Error::InvalidGroupTable(format!("column {} is not a permutation", b + 1)));
                }
            }
        }
        for a in 0..n {
            if product[0][a] != a || product[a][0] != a {
                return Err(Error::InvalidGroupTable("element 1 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if product[product[a][b]][c] != product[a][product[b][c]] {
                        return Err(Error::InvalidGroupTable(format!(
                            "not associative at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(GroupTable { product })
    }

    /// Reads a 1-based table as used in files.
    pub fn from_one_based(product: Vec<Vec<usize>>) -> Result<Self> {
        let zero_based = product
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| v.checked_sub(1).ok_or_else(|| Error::InvalidGroupTable("index 0 in 1-based table".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(zero_based)
    }

    /// Closure of `generators` under `op`, listed in breadth-first order from `identity`.
    pub fn generated<T: Clone + Eq + Hash>(identity: T, generators: &[T], op: impl Fn(&T, &T) -> T) -> Self {
        let mut elements = vec![identity];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut cursor = 0;
        while cursor < elements.len() {
            for g in generators {
                let next = op(&elements[cursor], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            cursor += 1;
        }
        let product = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&op(a, b)]).collect())
            .collect();
        Self::new(product).expect("closure of a group operation is a group")
    }

    pub fn order(&self) -> usize {
        self.product.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.product[a][b] == 0).expect("group element has an inverse")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of the abelianization `G/[G,G]`.
    pub fn abelianization_order(&self) -> usize {
        let n = self.order();
        let mut sub = vec![false; n];
        sub[0] = true;
        let mut members = vec![0];
        let comms: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b))))
            .collect();
        let mut frontier = comms.clone();
        while let Some(x) = frontier.pop() {
            if sub[x] {
                continue;
            }
            sub[x] = true;
            members.push(x);
            for &m in members.clone().iter() {
                frontier.push(self.mul(m, x));
                frontier.push(self.mul(x, m));
            }
        }
        n / members.len()
    }

    pub fn cyclic(n: usize) -> Self {
        Self::generated(0usize, &[1 % n], |a, b| (a + b) % n)
    }

    /// Direct product of cyclic groups.
    pub fn abelian(orders: &[usize]) -> Self {
        let id = vec![0usize; orders.len()];
        let gens: Vec<Vec<usize>> = (0..orders.len())
            .map(|k| (0..orders.len()).map(|i| usize::from(i == k) % orders[i]).collect())
            .collect();
        Self::generated(id, &gens, |a, b| a.iter().zip(b).zip(orders).map(|((x, y), m)| (x + y) % m).collect())
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::generated((0..n).collect(), &[rot, refl], compose)
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // (sign, unit) with units 0 = 1, 1 = i, 2 = j, 3 = k.
        fn unit_mul(a: u8, b: u8) -> (bool, u8) {
            match (a, b) {
                (0, x) | (x, 0) => (false, x),
                (x, y) if x == y => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        }
        Self::generated((false, 0u8), &[(false, 1), (false, 2)], |a, b| {
            let (neg, u) = unit_mul(a.1, b.1);
            (a.0 ^ b.0 ^ neg, u)
        })
    }

    /// Alternating group on four letters.
    pub fn alternating4() -> Self {
        Self::generated(vec![0, 1, 2, 3], &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], compose)
    }
}

fn compose(a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}
