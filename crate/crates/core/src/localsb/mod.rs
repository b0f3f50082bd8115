//! Standard bases in `k[x,y]` localized at the origin under the local
//! degree-then-lex ordering, via Mora's tangent-cone normal form.

pub mod basis;
pub mod mora;
pub mod order;
pub mod poly;

pub use basis::{
    hilbert_function_of_quotient, leading_term_ideal, reduced_standard_basis, standard_basis,
    SbOptions, StandardBasis,
};
pub use mora::mora_normal_form;
pub use order::compare_local;
pub use poly::{leading_term, BivarRing, LocalTerm, Poly};
