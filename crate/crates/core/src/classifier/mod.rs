//! Class structure: fixed positions, signatures, indices, members and the
//! two partition constructions.

mod index;
mod members;
mod partition;
mod positions;

pub use index::{
    affine_representative, base_point, classify, classify_by_search, classify_rule, equivalent,
    fixed_rule_mask, signature, ClassIndex, Signature,
};
pub use members::{
    class_member_rules, class_members, class_members_vec, class_size, expand_generator_pattern,
    generator_pattern, ClassMembers, PATTERN_FREE_MAX,
};
pub use partition::{
    fixed_partition, partitions_equal, recursive_partition, ClassPartition, PartitionClass,
    PartitionMethod,
};
pub use positions::{
    changed_count, changed_positions, changed_positions_closed_form, changed_positions_iter,
    fixed_positions, fixed_positions_closed_form, FixedPositions, POSITION_VARS_MAX,
};
