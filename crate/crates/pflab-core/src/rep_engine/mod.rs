//! Finite-dimensional modules over the orthogonal algebra with exact
//! rational matrix actions: the standard module, tensor constructions
//! with Young symmetrizers and traceless projection, highest-space
//! extraction for the interior subalgebra, and an independent dimension
//! oracle.

pub mod checks;
pub mod linalg;
pub mod rep;
pub mod tensor;
pub mod weyl;

pub use linalg::{determinant, kernel_basis, Elim, Inserted, SMat, SVec};
pub use rep::{
    all_highest_spaces, highest_space, standard_module, HighestSpace, RepModule,
};
pub use tensor::{
    tableau_vector, tensor_module, young_symmetrize, TensorModuleBundle, TensorSpace,
    TracelessCtx, YoungShape,
};
pub use weyl::{label_from_partition, partition_from_label, weyl_dim_odd_orthogonal};
