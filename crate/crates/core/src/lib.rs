//! Partial regularities, `a*`-invariants and local cohomology degrees of
//! Borel-type monomial ideals.
//!
//! ```
//! use borel_core::{parse_ideal, report, Route, Finite, MinusInfinity};
//!
//! let i = parse_ideal("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3").unwrap();
//! let r = report(&i, Route::Decomposition).unwrap();
//! assert_eq!(r.a_module.unwrap(), vec![Finite(8), Finite(2), MinusInfinity, MinusInfinity]);
//! assert_eq!(r.reg_module, Finite(8));
//! ```

pub mod borel;
pub mod compare;
pub mod decomposition;
pub mod degree;
pub mod error;
pub mod fuzz;
pub mod ideal;
pub mod invariants;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod properties;

pub use borel::{
    borel_check, is_borel_type, is_stable, is_strongly_stable_colon, satiety_bg_shortcut,
    satiety_quotient, sequential_chain, BorelCheck, SequentialChain,
};
pub use compare::{
    compare_routes, compare_routes_lenient, compare_routes_with, corrupted_decomposition, Verdict,
};
pub use decomposition::{
    decompose, is_irredundant, recompose, Decomposition, IrreducibleComponent,
};
pub use degree::{ExtendedDegree, Finite, MinusInfinity};
pub use error::{Error, Result};
pub use ideal::{minimalize, MonomialIdeal};
pub use invariants::{
    a_vector_chain, a_vector_decomposition, reg_via_stable_truncation, report,
    strongly_stable_fast, InvariantReport, Route,
};
pub use monomial::Monomial;
pub use oracle::{a0_direct, betti_table, trung_invariants, BettiTable};
pub use parse::{ideal_to_json, parse_ideal};
