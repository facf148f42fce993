//! Partitions, tableau counts, and symmetric-group characters.

pub mod character;
pub mod partition;
pub mod tableaux;

pub use character::character;
pub use partition::{partitions, partitions_with_depth_at_most, Partition};
pub use tableaux::{class_size, count_ssyt, count_syt, schur_weyl_expand};
