pub mod bitset;
pub mod catalog;
pub mod centralizers;
mod clique;
pub mod constructions;
pub mod group;
pub mod isomorphism;
pub mod perm;
pub mod theorems;
pub mod todd_coxeter;

pub use bitset::ElementSet;
pub use centralizers::{cent_profile, CentProfile};
pub use constructions::{parse_spec, GroupSpec};
pub use group::Group;
pub use theorems::{run_suite, SuiteConfig, TheoremReport};
