//! A walk up the tower in one sitting: arithmetic in M, recognizing
//! automorphisms, restricting to V, conjugating by Psi, and landing in P.
//! Complements the acceptance suite with cross-module round trips.

use mennicke::collect;
use mennicke::ggroup::{recognize, GElem};
use mennicke::mendo::MEndo;
use mennicke::mgroup::MElem;
use mennicke::pgroup::{abc, e_action, PElem};
use mennicke::vgroup::{extend_to_m, psi_tables, restrict, VEndo};
use mennicke::word::{parse_word, GroupId};

#[test]
fn from_words_to_the_top_of_the_tower() {
    // a word in M and its normal form
    let w = parse_word("z^-1 y x y x^-2", GroupId::M).unwrap();
    let nf = collect(&w, GroupId::M);
    assert_eq!(nf.to_string(), "x^-3 y^-2 z");

    // conjugation by that element is an automorphism recognized inside G
    let m = MElem::new(-1, 1, 1);
    let inner = MEndo::inner(&m);
    let g = recognize(&inner).unwrap();
    assert_eq!(g, GElem::from_parts(-1, 1, 1, false, false, false, 0));
    assert_eq!(inner.is_inner(), Some(m));

    // its restriction to V extends back to the same element
    assert_eq!(extend_to_m(&restrict(&g)), Some(g.clone()));

    // conjugating the restriction by Psi lands outside the inner copy
    let tau_g = psi_tables().tau_apply(&g);
    assert!(tau_g.t != [false; 3]);
    // and doing it twice is conjugation by c0 = extend(Psi^2)
    let c0 = extend_to_m(&VEndo::psi().compose(&VEndo::psi())).unwrap();
    assert_eq!(psi_tables().tau_apply(&tau_g), g.conj(&c0));

    // over in P, the outer generator relates X and A exactly as collection
    // of the corresponding word predicts
    let w = parse_word("X^-1 E^-1 X E", GroupId::P).unwrap();
    assert_eq!(
        mennicke::pgroup::eval_word(&w),
        PElem::from_g(GElem::gen_a())
    );
    assert_eq!(collect(&w, GroupId::P).to_string(), "A");

    // E^2 = ABC both as a fold and as an action
    assert_eq!(PElem::gen_e().pmul(&PElem::gen_e()), PElem::from_g(abc()));
    assert_eq!(e_action(&e_action(&g)), g.conj(&abc()));
}

#[test]
fn semantic_and_collection_stay_glued_along_long_products() {
    // multiply fifty generators together on both routes
    let gens = GElem::generators();
    let mut acc_g = GElem::identity();
    let mut acc_e = MEndo::identity();
    for n in 0..50usize {
        let pick = &gens[(n * 5 + 3) % 7];
        acc_g = acc_g.gmul(pick);
        acc_e = acc_e.compose(&pick.semantic());
        assert_eq!(acc_g.semantic(), acc_e);
        assert_eq!(recognize(&acc_e).as_ref(), Ok(&acc_g));
    }
}

#[test]
fn torsion_in_context() {
    // the unique torsion coset survives conjugation and automorphisms
    let t = MElem::new(3, -1, 5);
    assert_eq!(t.order(), mennicke::Order::Two);
    let g = GElem::from_parts(2, -1, 0, true, false, true, 2);
    let image = g.semantic().apply(&t);
    assert_eq!(image.order(), mennicke::Order::Two);
    let conj = t.conj(&MElem::new(-4, 7, 2));
    assert_eq!(conj.order(), mennicke::Order::Two);
}
