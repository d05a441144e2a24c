//! Kernel representation of finite categories and finite strict monoidal
//! categories as explicit object/morphism/composition/tensor tables.
//!
//! Everything downstream (centers, centralizers, colimits, comonoids)
//! consumes only this data model. Categories are immutable after
//! construction and all operations over them are pure.

mod category;
mod diagram;
mod functor;
pub mod io;
mod validate;

pub use category::{
    FinCat, FinCatBuilder, FinMonCat, FinMonCatBuilder, Limits, Mor, Obj, PartialityReport,
    TensorFunctor, TensorSide,
};
pub use diagram::Diagram;
pub use functor::Functor;
pub use validate::{ValidationReport, Violation};
