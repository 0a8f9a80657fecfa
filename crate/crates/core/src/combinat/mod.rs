//! Partitions, compositions, Young-diagram statistics, standard Young
//! tableaux and symmetric-group characters.

mod character;
mod partition;
mod syt;

pub use character::mn_character;
pub use partition::{
    cell_stats, compositions, nstat, partitions, partitions_bounded, t_mu, w_mu, Cell,
    Composition, Partition,
};
pub use syt::{syt_count_hook, syt_descents, SubsetMask};
