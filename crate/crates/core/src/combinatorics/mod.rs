//! Partitions, permutations, strips and 012-strings shared by every engine.

mod label_string;
mod littlewood_richardson;
mod partition;
mod permutation;
mod schubert_index;

pub use label_string::{check_two_step_descents, label_string, LabelString};
pub use littlewood_richardson::lr_coefficient;
pub use partition::{
    horizontal_strips_over, horizontal_strips_under, multiset_difference, strip_components, Partition,
    StrictPartition, StripComponents,
};
pub use permutation::{Permutation, SignedElement};
pub use schubert_index::{grassmannian_permutation, jd_string, poincare_dual, type_c_element, Family};
