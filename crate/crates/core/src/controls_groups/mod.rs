//! Control-like elements and the group flavors: elastic, fixed,
//! dominant/subordinate, dynamic-layout and the welded house pair.

mod control;
mod groups;

pub use control::{ControlEl, FrameZone};
pub use groups::{
    DominantGroup, DynChild, ElasticGroup, FixedGroup, Group, GroupDyn, GroupKind, Subordinate, Title, WeldGroup,
};
