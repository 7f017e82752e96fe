//! Free resolutions, Ext, strong Gorenstein projectivity and periodic
//! complete resolutions.

mod complete;
mod ext;
mod resolution;
mod sgp;

pub use complete::{
    check_complete_resolution, strongly_complete_resolution, CompletenessReport,
    StronglyCompleteResolution,
};
pub use ext::{ext1, ExtGroup, ExtSummary};
pub use resolution::{free_cover, free_resolution, FreeResolution};
pub use sgp::{
    find_sgp_witness, is_strongly_gorenstein_projective, Obstruction, SgpVerdict, SgpWitness,
    EXT_TEST_OBJECT,
};
