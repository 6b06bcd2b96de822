//! Isomorphism testing for small groups: an invariant fingerprint, then a
//! backtracking search over images of a generating sequence.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::centralizers::center;
use crate::group::Group;

pub const DEFAULT_ISOMORPHISM_CAP: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsomorphismError {
    #[error("group order {order} exceeds the isomorphism cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// Isomorphism invariants. Different fingerprints prove non-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub center_order: usize,
    pub element_order_histogram: BTreeMap<usize, usize>,
    pub conjugacy_class_size_histogram: BTreeMap<usize, usize>,
    pub derived_order: usize,
    pub derived_length: usize,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let mut element_order_histogram = BTreeMap::new();
    for x in g.elements() {
        *element_order_histogram.entry(g.element_order(x)).or_insert(0) += 1;
    }
    let mut conjugacy_class_size_histogram = BTreeMap::new();
    for class in g.conjugacy_classes() {
        *conjugacy_class_size_histogram.entry(class.len()).or_insert(0) += 1;
    }
    let series = g.derived_series();
    Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        center_order: center(g).len(),
        element_order_histogram,
        conjugacy_class_size_histogram,
        derived_order: g.derived_subgroup().len(),
        derived_length: series.len() - 1,
    }
}

pub fn is_isomorphic(g: &Group, h: &Group) -> Result<bool, IsomorphismError> {
    is_isomorphic_capped(g, h, DEFAULT_ISOMORPHISM_CAP)
}

pub fn is_isomorphic_capped(g: &Group, h: &Group, cap: usize) -> Result<bool, IsomorphismError> {
    for order in [g.order(), h.order()] {
        if order > cap {
            return Err(IsomorphismError::OrderCapExceeded { order, cap });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    if fingerprint(g) != fingerprint(h) {
        return Ok(false);
    }
    Ok(find_isomorphism(g, h).is_some())
}

fn centralizer_sizes(g: &Group) -> Vec<usize> {
    g.elements().map(|x| g.elements().filter(|&y| g.commute(x, y)).count()).collect()
}

/// Generators chosen greedily, largest element order first, each one
/// enlarging the subgroup generated so far.
fn greedy_generators(g: &Group, orders: &[usize]) -> Vec<usize> {
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
    let mut gens = Vec::new();
    let mut sub = g.trivial_subgroup();
    for x in by_order {
        if sub.is_full() {
            break;
        }
        if !sub.contains(x) {
            gens.push(x);
            sub = g.closure_from(sub, &gens);
        }
    }
    gens
}

/// Breadth-first words: for every element other than the identity, the
/// element it was reached from and the generator applied on the right.
fn spanning_tree(g: &Group, gens: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut seen = ElementSet::singleton(g.order(), 0);
    let mut queue = std::collections::VecDeque::from([0]);
    let mut steps = Vec::with_capacity(g.order());
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if seen.insert(y) {
                steps.push((y, x, k));
                queue.push_back(y);
            }
        }
    }
    steps
}

/// Returns an isomorphism `g -> h` as an image array, if one exists.
pub fn find_isomorphism(g: &Group, h: &Group) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let n = g.order();
    let og: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let oh: Vec<usize> = h.elements().map(|x| h.element_order(x)).collect();
    let cg = centralizer_sizes(g);
    let ch = centralizer_sizes(h);
    let gens = greedy_generators(g, &og);
    let tree = spanning_tree(g, &gens);
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&s| h.elements().filter(|&t| oh[t] == og[s] && ch[t] == cg[s]).collect()).collect();

    let mut images = Vec::with_capacity(gens.len());
    let mut map = vec![usize::MAX; n];
    search(g, h, &gens, &candidates, &tree, &og, &oh, &mut images, &mut map).then_some(map)
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Group,
    h: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    tree: &[(usize, usize, usize)],
    og: &[usize],
    oh: &[usize],
    images: &mut Vec<usize>,
    map: &mut Vec<usize>,
) -> bool {
    let i = images.len();
    if i == gens.len() {
        return extends_to_isomorphism(g, h, gens, images, tree, map);
    }
    for &t in &candidates[i] {
        let compatible = (0..i).all(|j| {
            oh[h.mul(images[j], t)] == og[g.mul(gens[j], gens[i])]
                && oh[h.mul(t, images[j])] == og[g.mul(gens[i], gens[j])]
        });
        if !compatible {
            continue;
        }
        images.push(t);
        if search(g, h, gens, candidates, tree, og, oh, images, map) {
            return true;
        }
        images.pop();
    }
    false
}

fn extends_to_isomorphism(
    g: &Group,
    h: &Group,
    gens: &[usize],
    images: &[usize],
    tree: &[(usize, usize, usize)],
    map: &mut [usize],
) -> bool {
    map.fill(usize::MAX);
    map[0] = 0;
    let mut hit = ElementSet::singleton(h.order(), 0);
    for &(y, x, k) in tree {
        let img = h.mul(map[x], images[k]);
        if !hit.insert(img) {
            return false;
        }
        map[y] = img;
    }
    // phi(x s) = phi(x) phi(s) for every x and generator s makes phi a homomorphism
    g.elements().all(|x| gens.iter().zip(images).all(|(&s, &t)| map[g.mul(x, s)] == h.mul(map[x], t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::todd_coxeter::{presented_group, Presentation};

    fn assert_is_isomorphism(g: &Group, h: &Group, map: &[usize]) {
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(map[g.mul(a, b)], h.mul(map[a], map[b]));
            }
        }
        let mut img = map.to_vec();
        img.sort_unstable();
        img.dedup();
        assert_eq!(img.len(), g.order());
    }

    #[test]
    fn fingerprints_separate() {
        let z4 = cyclic(4).unwrap();
        let v4 = elem_abelian(2, 2).unwrap();
        assert_ne!(fingerprint(&z4).element_order_histogram, fingerprint(&v4).element_order_histogram);
        let d8 = dihedral(8).unwrap();
        let q8 = dicyclic(2).unwrap();
        let (fd, fq) = (fingerprint(&d8), fingerprint(&q8));
        assert_eq!((fd.center_order, fd.derived_order), (fq.center_order, fq.derived_order));
        assert_eq!(fd.element_order_histogram[&2], 5);
        assert_eq!(fq.element_order_histogram[&2], 1);
        assert_eq!(fingerprint(&d8), fingerprint(&dihedral(8).unwrap()));
    }

    #[test]
    fn small_isomorphisms() {
        let s3 = symmetric(3).unwrap();
        let d6 = dihedral(6).unwrap();
        assert!(is_isomorphic(&d6, &s3).unwrap());
        assert_is_isomorphism(&d6, &s3, &find_isomorphism(&d6, &s3).unwrap());
        let q = Presentation::parse(&["a", "b"], &["a^4", "a^2 = b^2", "b^-1 a b = a^-1"], Some(8)).unwrap();
        assert!(is_isomorphic(&dicyclic(2).unwrap(), &presented_group(&q).unwrap()).unwrap());
        assert!(!is_isomorphic(&cyclic(4).unwrap(), &elem_abelian(2, 2).unwrap()).unwrap());
        assert!(!is_isomorphic(&cyclic(4).unwrap(), &cyclic(5).unwrap()).unwrap());
    }

    #[test]
    fn larger_isomorphisms() {
        let a5 = alternating(5).unwrap();
        let p5 = psl2(5).unwrap();
        let map = find_isomorphism(&p5, &a5).unwrap();
        assert_is_isomorphism(&p5, &a5, &map);
        let r = Presentation::parse(&["x", "y"], &["x^5", "y^4", "x y = y x^3"], Some(20)).unwrap();
        assert!(is_isomorphic(&sdp_cyclic(5, 4, 2).unwrap(), &presented_group(&r).unwrap()).unwrap());
        assert!(!is_isomorphic(&semidihedral(2).unwrap(), &dihedral(16).unwrap()).unwrap());
    }

    #[test]
    fn equal_fingerprints_need_the_search() {
        let a = sdp_cyclic(4, 4, 3).unwrap();
        let b = direct_product(&dicyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert_eq!(fingerprint(&a), fingerprint(&b));
        assert!(find_isomorphism(&a, &b).is_none());
        assert!(!is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn cap() {
        let g = cyclic(700).unwrap();
        assert_eq!(is_isomorphic(&g, &g), Err(IsomorphismError::OrderCapExceeded { order: 700, cap: 600 }));
    }
}
