//! Exact bounds on the degree-two entry of Gorenstein h-vectors.
//!
//! The crate is organised bottom-up: [`binomial`] supplies Macaulay
//! expansions, [`osequence`] validates Hilbert functions, [`bounds`] and
//! [`constructions`] give the lower and upper bounds on `h_2`, and
//! [`apolarity`] certifies concrete h-vectors from explicit forms.

pub mod apolarity;
pub mod binomial;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod osequence;

pub use apolarity::{
    catalecticant, hilbert_of_form, lift_form, search_form, trivial_extension_form,
    CatalecticantMatrix, Field, Form, Monomial, SearchOutcome,
};
pub use binomial::{
    binomial, expand, green_bound, macaulay_bound, BinomialExpansion, BinomialTerm, ShiftSpec,
};
pub use bounds::{
    gorenstein_necessary, lower_bound, unimodality_table, BoundReport, Decomposition, Feasibility,
    TableRow,
};
pub use constructions::{
    asymptotic_table, lemma11_decompose, lift_hvector, trivial_extension, upper_bound_h2,
    AsymptoticRow, Lemma11Triple, UpperBound,
};
pub use error::{Error, Result};
pub use osequence::{is_osequence, is_unimodal, oracle_osequences, HVector};
