//! TD-analysis primitives and the `(p,q)`, twin-basic and bibasic
//! hypergeometric layer.

mod checks;
mod hypergeom;
mod pq;
mod td;

pub use checks::special_function_suite;
pub use hypergeom::{
    pq_exp_as_phi, q_pochhammer, td_exp_as_bibasic, twin_pochhammer, Bibasic, Evaluation, Mode,
    Normalizer, Numeric, TwinPhi,
};
pub use pq::{pq_exp_f64, pq_factorial, pq_factorial_at, pq_number, pq_number_at, PqPoly};
pub(crate) use td::factorial;
pub use td::{
    td_derivative, td_exp, td_exp_coeff, td_exp_f64, td_factorial, td_factorial_product, td_number,
};
