//! Element and pair centralizers, centers, and the invariant profile.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::clique::max_clique;
use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CentralizerError {
    #[error("group of order {order} has no pair of distinct elements")]
    GroupTooSmall { order: usize },
    #[error("the group is abelian")]
    AbelianGroup,
}

pub fn centralizer_elem(g: &Group, x: usize) -> ElementSet {
    ElementSet::from_elements(g.order(), g.elements().filter(|&y| g.commute(x, y)))
}

/// Intersection of element centralizers; the empty set centralizes to `G`.
pub fn centralizer_set(g: &Group, s: &ElementSet) -> ElementSet {
    let mut acc = g.full_set();
    for x in s {
        acc.intersect_with(&centralizer_elem(g, x));
    }
    acc
}

pub fn center(g: &Group) -> ElementSet {
    ElementSet::from_elements(g.order(), g.elements().filter(|&x| g.elements().all(|y| g.commute(x, y))))
}

/// `{x : [x, g] ∈ Z(G) for all g}`
pub fn second_center(g: &Group) -> ElementSet {
    let z = center(g);
    ElementSet::from_elements(g.order(), g.elements().filter(|&x| g.elements().all(|y| z.contains(g.commutator(x, y)))))
}

/// Elements grouped by their centralizer, in order of first appearance.
#[derive(Debug, Clone)]
pub struct CentralizerClasses {
    pub centralizers: Vec<ElementSet>,
    pub members: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl CentralizerClasses {
    pub fn new(g: &Group) -> Self {
        let mut index: HashMap<ElementSet, usize> = HashMap::new();
        let mut out = Self { centralizers: Vec::new(), members: Vec::new(), class_of: Vec::new() };
        for x in g.elements() {
            let c = centralizer_elem(g, x);
            let i = *index.entry(c.clone()).or_insert_with(|| {
                out.centralizers.push(c);
                out.members.push(Vec::new());
                out.centralizers.len() - 1
            });
            out.members[i].push(x);
            out.class_of.push(i);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.centralizers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centralizers.is_empty()
    }
}

pub fn cent_set(g: &Group) -> BTreeSet<ElementSet> {
    CentralizerClasses::new(g).centralizers.into_iter().collect()
}

/// Literal definition: `C_G(x) ∩ C_G(y)` over all pairs `x != y`.
pub fn two_cent_naive(g: &Group) -> Result<BTreeSet<ElementSet>, CentralizerError> {
    if g.order() < 2 {
        return Err(CentralizerError::GroupTooSmall { order: g.order() });
    }
    let cents: Vec<ElementSet> = g.elements().map(|x| centralizer_elem(g, x)).collect();
    let mut out = BTreeSet::new();
    for x in g.elements() {
        for y in x + 1..g.order() {
            out.insert(cents[x].intersection(&cents[y]));
        }
    }
    Ok(out)
}

/// Same set as [`two_cent_naive`], built from centralizer classes: a pair
/// from two different classes contributes their intersection and a pair
/// inside one class contributes that class's centralizer.
pub fn two_cent(g: &Group) -> Result<BTreeSet<ElementSet>, CentralizerError> {
    if g.order() < 2 {
        return Err(CentralizerError::GroupTooSmall { order: g.order() });
    }
    Ok(two_cent_from_classes(&CentralizerClasses::new(g)))
}

fn two_cent_from_classes(classes: &CentralizerClasses) -> BTreeSet<ElementSet> {
    let k = classes.len();
    let mut out = BTreeSet::new();
    for i in 0..k {
        if classes.members[i].len() >= 2 {
            out.insert(classes.centralizers[i].clone());
        }
        for j in i + 1..k {
            out.insert(classes.centralizers[i].intersection(&classes.centralizers[j]));
        }
    }
    out
}

pub fn delta(g: &Group) -> u8 {
    u8::from(center(g).len() == 1)
}

fn is_abelian_subset(g: &Group, s: &ElementSet) -> bool {
    let elems: Vec<usize> = s.iter().collect();
    elems.iter().enumerate().all(|(i, &a)| elems[i + 1..].iter().all(|&b| g.commute(a, b)))
}

/// Every non-central element has an abelian centralizer.
pub fn is_ca_group(g: &Group) -> bool {
    is_ca_from_classes(g, &CentralizerClasses::new(g))
}

fn is_ca_from_classes(g: &Group, classes: &CentralizerClasses) -> bool {
    classes.centralizers.iter().filter(|c| !c.is_full()).all(|c| is_abelian_subset(g, c))
}

/// Largest set of pairwise non-commuting elements, with one witness.
///
/// Two elements with the same centralizer commute, so a clique uses at most
/// one element per centralizer class and the search runs on class
/// representatives.
pub fn max_noncommuting_set(g: &Group) -> Result<(usize, ElementSet), CentralizerError> {
    max_noncommuting_from_classes(g, &CentralizerClasses::new(g))
}

fn max_noncommuting_from_classes(
    g: &Group,
    classes: &CentralizerClasses,
) -> Result<(usize, ElementSet), CentralizerError> {
    let reps: Vec<usize> =
        (0..classes.len()).filter(|&i| !classes.centralizers[i].is_full()).map(|i| classes.members[i][0]).collect();
    if reps.is_empty() {
        return Err(CentralizerError::AbelianGroup);
    }
    let adjacency: Vec<Vec<bool>> = reps.iter().map(|&a| reps.iter().map(|&b| !g.commute(a, b)).collect()).collect();
    let clique = max_clique(&adjacency);
    let witness = ElementSet::from_elements(g.order(), clique.iter().map(|&i| reps[i]));
    Ok((clique.len(), witness))
}

/// Every invariant of one group, as reported by `compute`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentProfile {
    pub group_spec: String,
    pub order: usize,
    pub center_order: usize,
    pub n_cent: usize,
    pub n_2cent: usize,
    pub delta: u8,
    pub is_ca: bool,
    /// `None` for abelian groups, where no non-commuting pair exists.
    pub r: Option<usize>,
    pub derived_order: usize,
    pub solvable: bool,
    pub second_center_order: usize,
    pub quotient_n_cent: usize,
    /// `None` when `G/Z(G)` is trivial.
    pub quotient_n_2cent: Option<usize>,
    pub primitive_n: bool,
    pub primitive_2n: bool,
}

pub fn cent_profile(g: &Group, spec_label: &str) -> Result<CentProfile, CentralizerError> {
    if g.order() < 2 {
        return Err(CentralizerError::GroupTooSmall { order: g.order() });
    }
    let classes = CentralizerClasses::new(g);
    let n_cent = classes.len();
    let n_2cent = two_cent_from_classes(&classes).len();
    let z = center(g);
    let r = if g.is_abelian() { None } else { Some(max_noncommuting_from_classes(g, &classes)?.0) };
    let (quotient_n_cent, quotient_n_2cent) = if z.len() == 1 {
        (n_cent, Some(n_2cent))
    } else {
        let q = g.quotient(&z).expect("the center is normal");
        let qc = CentralizerClasses::new(&q);
        let q2 = (q.order() >= 2).then(|| two_cent_from_classes(&qc).len());
        (qc.len(), q2)
    };
    Ok(CentProfile {
        group_spec: spec_label.to_string(),
        order: g.order(),
        center_order: z.len(),
        n_cent,
        n_2cent,
        delta: u8::from(z.len() == 1),
        is_ca: is_ca_from_classes(g, &classes),
        r,
        derived_order: g.derived_subgroup().len(),
        solvable: g.is_solvable(),
        second_center_order: second_center(g).len(),
        quotient_n_cent,
        quotient_n_2cent,
        primitive_n: n_cent == quotient_n_cent,
        primitive_2n: quotient_n_2cent == Some(n_2cent),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    fn s3() -> Group {
        symmetric(3).unwrap()
    }

    /// Pairwise non-commuting sets by exhaustive search over elements.
    fn brute_r(g: &Group) -> usize {
        fn extend(g: &Group, chosen: &mut Vec<usize>, from: usize, best: &mut usize) {
            *best = (*best).max(chosen.len());
            for x in from..g.order() {
                if chosen.iter().all(|&c| !g.commute(c, x)) {
                    chosen.push(x);
                    extend(g, chosen, x + 1, best);
                    chosen.pop();
                }
            }
        }
        let mut best = 0;
        extend(g, &mut Vec::new(), 0, &mut best);
        best
    }

    #[test]
    fn element_centralizers() {
        let g = s3();
        assert!(centralizer_elem(&g, 0).is_full());
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(centralizer_elem(&g, t), ElementSet::from_elements(6, [0, t]));
        let ts: Vec<usize> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
        let pair = ElementSet::from_elements(6, [ts[0], ts[1]]);
        assert_eq!(centralizer_set(&g, &pair), center(&g));
        assert!(centralizer_set(&g, &ElementSet::empty(6)).is_full());
    }

    #[test]
    fn centers() {
        let d8 = dihedral(8).unwrap();
        assert_eq!(center(&d8).len(), 2);
        assert!(second_center(&d8).is_full());
        assert_eq!(center(&s3()).len(), 1);
        assert_eq!(second_center(&s3()).len(), 1);
        let c6 = cyclic(6).unwrap();
        assert!(center(&c6).is_full() && second_center(&c6).is_full());
        assert_eq!((delta(&s3()), delta(&d8), delta(&c6)), (1, 0, 0));
    }

    #[test]
    fn second_center_matches_quotient_center() {
        for g in [dicyclic(3).unwrap(), dihedral(16).unwrap(), semidihedral(2).unwrap()] {
            let z = center(&g);
            let (q, map) = g.quotient_map(&z).unwrap();
            let zq = center(&q);
            let pre = ElementSet::from_elements(g.order(), g.elements().filter(|&x| zq.contains(map[x])));
            assert_eq!(pre, second_center(&g));
        }
    }

    #[test]
    fn cent_counts() {
        assert_eq!(cent_set(&cyclic(5).unwrap()).len(), 1);
        assert_eq!(cent_set(&dihedral(8).unwrap()).len(), 4);
        assert_eq!(cent_set(&alternating(5).unwrap()).len(), 22);
    }

    #[test]
    fn two_cent_counts() {
        assert_eq!(two_cent_naive(&cyclic(4).unwrap()).unwrap().len(), 1);
        assert_eq!(two_cent_naive(&s3()).unwrap().len(), 5);
        assert_eq!(two_cent_naive(&dihedral(8).unwrap()).unwrap().len(), 5);
        assert_eq!(two_cent(&alternating(4).unwrap()).unwrap().len(), 6);
        assert_eq!(two_cent(&dihedral(14).unwrap()).unwrap().len(), 9);
        assert_eq!(two_cent(&dihedral(12).unwrap()).unwrap().len(), 6);
        assert_eq!(two_cent(&Group::trivial()), Err(CentralizerError::GroupTooSmall { order: 1 }));
        assert!(two_cent_naive(&Group::trivial()).is_err());
    }

    #[test]
    fn two_cent_agrees_with_naive() {
        for g in [
            s3(),
            dihedral(8).unwrap(),
            dicyclic(2).unwrap(),
            alternating(4).unwrap(),
            symmetric(4).unwrap(),
            cyclic(2).unwrap(),
            sdp_cyclic(5, 4, 2).unwrap(),
        ] {
            assert_eq!(two_cent(&g).unwrap(), two_cent_naive(&g).unwrap());
        }
    }

    #[test]
    fn ca_groups() {
        assert!(is_ca_group(&s3()));
        assert!(is_ca_group(&alternating(5).unwrap()));
        assert!(is_ca_group(&cyclic(9).unwrap()));
        // (0 1)(2 3) has a dihedral centralizer of order 8
        assert!(!is_ca_group(&symmetric(4).unwrap()));
    }

    #[test]
    fn noncommuting_sets() {
        for (g, r) in [(s3(), 4), (dihedral(8).unwrap(), 3), (dicyclic(2).unwrap(), 3)] {
            let (got, witness) = max_noncommuting_set(&g).unwrap();
            assert_eq!(got, r);
            assert_eq!(brute_r(&g), r);
            assert_eq!(witness.len(), r);
            let w: Vec<usize> = witness.iter().collect();
            assert!(w.iter().enumerate().all(|(i, &a)| w[i + 1..].iter().all(|&b| !g.commute(a, b))));
        }
        for g in [alternating(4).unwrap(), symmetric(4).unwrap(), dihedral(12).unwrap()] {
            assert_eq!(max_noncommuting_set(&g).unwrap().0, brute_r(&g));
        }
        assert_eq!(max_noncommuting_set(&alternating(5).unwrap()).unwrap().0, 21);
        assert_eq!(max_noncommuting_set(&cyclic(3).unwrap()), Err(CentralizerError::AbelianGroup));
    }

    #[test]
    fn profiles() {
        let p = cent_profile(&s3(), "S(3)").unwrap();
        assert_eq!(
            (p.order, p.center_order, p.n_cent, p.n_2cent, p.delta, p.is_ca, p.primitive_2n),
            (6, 1, 5, 5, 1, true, true)
        );
        assert_eq!(p.r, Some(4));
        let a4 = cent_profile(&alternating(4).unwrap(), "A(4)").unwrap();
        assert_eq!((a4.n_2cent, a4.primitive_2n), (6, true));
        let z8 = cent_profile(&cyclic(8).unwrap(), "C(8)").unwrap();
        assert_eq!((z8.n_cent, z8.n_2cent, z8.delta, z8.r), (1, 1, 0, None));
        assert_eq!(z8.quotient_n_2cent, None);
        let d8 = cent_profile(&dihedral(8).unwrap(), "D(8)").unwrap();
        assert_eq!((d8.quotient_n_cent, d8.quotient_n_2cent, d8.primitive_2n), (1, Some(1), false));
        assert!(cent_profile(&Group::trivial(), "C(1)").is_err());
    }
}
