//! Exact symbolic computation for the Mennicke group M = M(-1,-1,-1) and its
//! automorphism tower.
//!
//! The crate implements, with exact integer arithmetic throughout:
//!
//! - [`mgroup`]: normal-form arithmetic in M = ⟨x,y,z | x^y=x⁻¹, y^z=y⁻¹, z^x=z⁻¹⟩,
//!   infinite dihedral images, torsion and coset classification;
//! - [`word`]: free words, parsing/printing, and a slow rule-driven collector
//!   used as ground truth for every fast closed form;
//! - [`mendo`]: endomorphisms of M by generator images, automorphism and
//!   inner-ness decisions, and the induced action on M/M²;
//! - [`ggroup`]: the automorphism group G = Aut(M) as a presented group with
//!   normal form X^aY^bZ^cA^iB^jC^kD^ℓ, plus the semantic functor onto
//!   checked endomorphisms and normal-form recognition;
//! - [`vgroup`]: the characteristic subgroup V = ⟨xy, yz, zx⟩, the outer
//!   automorphism Ψ of V, and Aut(V) as pairs over G;
//! - [`pgroup`]: P = Aut(G) = Aut(Aut(M)) with the extra generator E, and the
//!   correspondence Aut(V) ≅ P;
//! - [`f2quot`]: finite quotients of G and P, GF(2) subspace enumeration, and
//!   the exhaustive structural scans;
//! - [`checks`]: the verification catalog behind the `verify` CLI command.
//!
//! ```
//! use mennicke::{collect, parse_word, GroupId, MElem};
//!
//! // (xy)(zx) = y z^-1, by closed form and by rewriting
//! let product = MElem::new(1, 1, 0).mul(&MElem::new(1, 0, -1));
//! assert_eq!(product, MElem::new(0, 1, -1));
//! let word = parse_word("x y z x", GroupId::M).unwrap();
//! assert_eq!(collect(&word, GroupId::M).to_string(), "y z^-1");
//!
//! // xyz is an involution
//! let t = MElem::new(1, 1, 1);
//! assert!(t.mul(&t).is_identity());
//! ```

pub mod checks;
pub mod f2quot;
pub mod ggroup;
pub mod mendo;
pub mod mgroup;
pub mod pgroup;
pub mod vgroup;
pub mod word;
pub mod zlattice;

#[cfg(test)]
pub(crate) mod testutil;

pub use checks::{run_checks, CheckResult, CheckStatus};
pub use mgroup::{CosetClass, DInfElem, MElem, Order};
pub use word::{collect, parse_word, GroupId, Word};
