//! Branching machinery: the extremal projector for the interior
//! subalgebra, normalized lowering operators between interior-highest
//! spaces, scalar operators from Pfaffian elements, labelled corner
//! bases with their image formulas, and counting oracles for labels and
//! basis tables.

pub mod checks;
pub mod labels;
pub mod ops;
pub mod proj;
pub mod scalars;

pub use checks::{
    check_gt_count, check_label_completeness, check_label_count, check_main_theorem,
    check_nonsymmetric_vanishing, check_projector, check_symmetric_hc,
    check_symmetric_hc_closed_form, check_tm_proportionality, check_xi_basis, check_z_mirror,
    check_z_weight_shift, fit_f0, module_label, pin_tm_scalar,
};
pub use labels::{
    branching_labels, gt_tables, interleaves_interior, interleaves_module, BranchLabel, GtTable,
};
pub use ops::{full_highest_vector, hc_value, MzContext, MzError, ZNumerator};
pub use proj::{Projector, SingularWeight};
pub use scalars::{affine_eval, affine_fit, c_poly_printed, d_poly, MzScalars, TmScalarPin};
