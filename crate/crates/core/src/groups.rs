//! Small permutation groups and their multiplication tables.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type Perm = Vec<usize>;

/// A finite group as a sorted list of permutations (identity first) with
/// multiplication `(gh)(x) = g(h(x))`.
#[derive(Clone, Debug)]
pub struct Group {
    elements: Vec<Perm>,
    table: Vec<Vec<usize>>,
}

fn compose(g: &Perm, h: &Perm) -> Perm {
    h.iter().map(|&x| g[x]).collect()
}

fn closure(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let id: Perm = (0..degree).collect();
    let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = compose(s, &g);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    // BTreeSet order puts the identity first: it is lexicographically least.
    seen.into_iter().collect()
}

/// Permutation from cycles on `degree` points.
pub fn cycles(degree: usize, cs: &[&[usize]]) -> Perm {
    let mut p: Perm = (0..degree).collect();
    for c in cs {
        for (k, &x) in c.iter().enumerate() {
            p[x] = c[(k + 1) % c.len()];
        }
    }
    p
}

impl Group {
    pub fn generated(degree: usize, gens: &[Perm]) -> Group {
        let elements = closure(degree, gens);
        let index = |p: &Perm| elements.binary_search(p).expect("closed under composition");
        let table = elements
            .iter()
            .map(|g| elements.iter().map(|h| index(&compose(g, h))).collect())
            .collect();
        Group { elements, table }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// Indices of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<Vec<usize>> {
        let degree = self.elements[0].len();
        closure(degree, gens)
            .iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::NotASubgroup(format!("{p:?} is not in the group"))))
            .collect()
    }

    /// Checks closure of an index set and returns it sorted.
    pub fn check_subgroup(&self, h: &[usize]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = h.iter().copied().collect();
        if !set.contains(&0) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        for &x in &set {
            if x >= self.order() {
                return Err(Error::NotASubgroup(format!("index {x} out of range")));
            }
            for &y in &set {
                if !set.contains(&self.table[x][y]) {
                    return Err(Error::NotASubgroup(format!("product of {x} and {y} leaves the subset")));
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.table[g][h] == 0).expect("group element has an inverse")
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        let set: BTreeSet<usize> = h.iter().copied().collect();
        (0..self.order()).all(|g| {
            let gi = self.inverse(g);
            h.iter().all(|&x| set.contains(&self.table[self.table[g][x]][gi]))
        })
    }
}

pub fn symmetric3() -> Group {
    Group::generated(3, &[cycles(3, &[&[0, 1]]), cycles(3, &[&[0, 1, 2]])])
}

/// Symmetries of a square with vertices `0..4` in cyclic order.
pub fn dihedral4() -> Group {
    Group::generated(4, &[cycles(4, &[&[0, 1, 2, 3]]), cycles(4, &[&[1, 3]])])
}

pub fn cyclic(n: usize) -> Group {
    let gen: Vec<usize> = (0..n).collect();
    Group::generated(n, &[cycles(n, &[&gen])])
}

/// Left regular representation of `{±1, ±i, ±j, ±k}`; point `2q + s` is
/// the unit `q ∈ {1, i, j, k}` with sign `(-1)^s`.
pub fn quaternion() -> Group {
    Group::generated(8, &[quaternion_left_mul(1), quaternion_left_mul(2)])
}

/// Left multiplication by `i` (`q = 1`) or `j` (`q = 2`).
pub fn quaternion_left_mul(q: usize) -> Perm {
    // unit products q·p = sign · r
    const PROD: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    (0..8)
        .map(|x| {
            let (p, s) = (x / 2, x % 2);
            let (sign, r) = PROD[q][p];
            2 * r + (s + sign) % 2
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_normality() {
        let s3 = symmetric3();
        assert_eq!(s3.order(), 6);
        let a3 = s3.subgroup(&[cycles(3, &[&[0, 1, 2]])]).unwrap();
        assert!(s3.is_normal(&a3));
        let t = s3.subgroup(&[cycles(3, &[&[0, 1]])]).unwrap();
        assert!(!s3.is_normal(&t));
        assert_eq!(dihedral4().order(), 8);
        assert_eq!(cyclic(5).order(), 5);
        let q8 = quaternion();
        assert_eq!(q8.order(), 8);
        // every subgroup of Q8 is normal; i has order 4
        let i = q8.subgroup(&[quaternion_left_mul(1)]).unwrap();
        assert_eq!(i.len(), 4);
        assert!(q8.is_normal(&i));
        assert!(s3.check_subgroup(&[0, 2, 3]).is_err());
    }
}
