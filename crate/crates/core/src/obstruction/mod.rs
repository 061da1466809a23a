//! Obstruction candidates: enumeration, mining, fans, gluing, and branches.

pub mod branches;
pub mod enumerate;
pub mod fans;
pub mod mine;

pub use branches::{
    base_branches, branch_bound_holds, branch_count, branch_set, three_branch_bound_holds, three_branch_count,
    three_branch_set, verify_three_branch, Branch, ThreeBranchReport,
};
pub use enumerate::{enumerate_connected_graphs, enumerate_up_to, read_graph6_file};
pub use fans::{
    canonical_rooted, derive_fan_base, fan_check_solver, fan_check_structural, glue_at_root, glue_family_at_root,
    GlueReport,
};
pub use mine::{mine_from, mine_obstructions, LevelStats, MineReport};
