//! Algebras, modules and bimodules.

mod algebra;
mod bimodule;
mod module;
mod poly;

pub use algebra::{Algebra, Arrow, Relation};
pub use bimodule::{
    bimodule_hom_basis, enveloping_algebra, ground_algebra, hom_over_left, hom_over_right, tensor_over, BimoduleRep,
};
pub use module::{
    find_isomorphism, hom_basis, hom_dim, indecomposable_injectives, indecomposable_projectives, is_isomorphic,
    simple_modules, ModuleRep, Side,
};
pub(crate) use bimodule::same_algebra;
