//! Permutations and the breadth-first closure of a permutation group.

use std::collections::HashMap;

use thiserror::Error;

use crate::group::{AssocCheck, Group, GroupError, DEFAULT_ELEMENT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("closure exceeded the element cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A permutation of `0..degree`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Self(images.into_iter().map(|x| x as u32).collect()))
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images).ok_or(PermError::NotAPermutation { index: 0, degree })
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }
}

/// Closes the group generated by `gens` under composition. Elements are
/// numbered in breadth-first discovery order with the identity first.
pub fn permutation_group(degree: usize, gens: &[Permutation]) -> Result<Group, PermError> {
    permutation_group_capped(degree, gens, DEFAULT_ELEMENT_CAP)
}

pub fn permutation_group_capped(degree: usize, gens: &[Permutation], cap: usize) -> Result<Group, PermError> {
    for (index, g) in gens.iter().enumerate() {
        if g.degree() != degree {
            return Err(PermError::NotAPermutation { index, degree });
        }
    }
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(elements[0].clone(), 0)]);
    // parent[x] = (p, k) with x = elements[p] * gens[k]
    let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
    let mut right_by_gen: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            let y = elements[i].then(g);
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    if elements.len() >= cap {
                        return Err(PermError::OrderCapExceeded { cap });
                    }
                    let j = elements.len();
                    index.insert(y.clone(), j);
                    elements.push(y);
                    parent.push((i, k));
                    j
                }
            };
            row.push(j);
        }
        right_by_gen.push(row);
        i += 1;
    }

    // Every element b != e is parent(b) * gen, so a*b = (a*parent(b)) * gen;
    // discovery order guarantees the parent column is already filled.
    let n = elements.len();
    let mut flat = vec![0u32; n * n];
    for a in 0..n {
        flat[a * n] = a as u32;
    }
    for b in 1..n {
        let (p, k) = parent[b];
        for a in 0..n {
            let ap = flat[a * n + p] as usize;
            flat[a * n + b] = right_by_gen[ap][k] as u32;
        }
    }
    Ok(Group::from_flat(n, flat, None, AssocCheck::Inherited)?)
}
