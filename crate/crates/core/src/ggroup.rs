//! The automorphism group G = Aut(M) as a presented group.
//!
//! G is generated by the inner automorphisms X, Y, Z (conjugation by x, y,
//! z), the kernel representatives A: x ↦ xz², B: y ↦ yx², C: z ↦ zy², and
//! D = θ, and every element has a unique normal form
//!
//!   X^a Y^b Z^c A^i B^j C^k D^ℓ,  a,b,c ∈ ℤ, i,j,k ∈ {0,1}, ℓ ∈ {0,1,2}.
//!
//! Multiplication is implemented by closed-form collection: the inner block
//! multiplies exactly like M, conjugation by D cycles both generator triples,
//! conjugation by A, B, C acts on the inner block through the kernel family,
//! and the bit squares fold via A² = Z², B² = X², C² = Y².
//!
//! Two independent multiplication paths exist deliberately: [`GElem::gmul`]
//! (collection) and composition of the checked endomorphisms returned by
//! [`GElem::semantic`], glued together by [`recognize`]. Their agreement is
//! property-tested; neither is trusted alone.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::mendo::MEndo;
use crate::mgroup::{fmt_word, CosetClass, MElem};
use crate::word::{GroupId, Word};

/// Element of G in normal form. The X/Y/Z exponents are kept as an [`MElem`]
/// because the inner copy ⟨X,Y,Z⟩ ≅ M multiplies with the same closed form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GElem {
    /// Exponents (a, b, c) of X^a Y^b Z^c.
    pub m: MElem,
    /// Bits (i, j, k) of A^i B^j C^k.
    pub t: [bool; 3],
    /// Exponent ℓ of D^ℓ, reduced mod 3.
    pub l: u8,
}

impl GElem {
    pub fn identity() -> GElem {
        GElem {
            m: MElem::identity(),
            t: [false; 3],
            l: 0,
        }
    }

    pub fn from_parts(a: i64, b: i64, c: i64, i: bool, j: bool, k: bool, l: u8) -> GElem {
        assert!(l < 3);
        GElem {
            m: MElem::new(a, b, c),
            t: [i, j, k],
            l,
        }
    }

    pub fn gen_x() -> GElem {
        GElem::from_parts(1, 0, 0, false, false, false, 0)
    }

    pub fn gen_y() -> GElem {
        GElem::from_parts(0, 1, 0, false, false, false, 0)
    }

    pub fn gen_z() -> GElem {
        GElem::from_parts(0, 0, 1, false, false, false, 0)
    }

    pub fn gen_a() -> GElem {
        GElem::from_parts(0, 0, 0, true, false, false, 0)
    }

    pub fn gen_b() -> GElem {
        GElem::from_parts(0, 0, 0, false, true, false, 0)
    }

    pub fn gen_c() -> GElem {
        GElem::from_parts(0, 0, 0, false, false, true, 0)
    }

    pub fn gen_d() -> GElem {
        GElem::from_parts(0, 0, 0, false, false, false, 1)
    }

    /// The seven generators in normal-form order.
    pub fn generators() -> [GElem; 7] {
        [
            GElem::gen_x(),
            GElem::gen_y(),
            GElem::gen_z(),
            GElem::gen_a(),
            GElem::gen_b(),
            GElem::gen_c(),
            GElem::gen_d(),
        ]
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity() && self.t == [false; 3] && self.l == 0
    }

    /// Normal-form product via collection.
    pub fn gmul(&self, other: &GElem) -> GElem {
        // D^{ℓ₁} m₂ D^{-ℓ₁} = θ^{-ℓ₁}(m₂) on the inner block,
        // D^{ℓ₁} A^i B^j C^k D^{-ℓ₁} shifts the bits backwards
        let m2 = theta_conj_back(self.l).apply(&other.m);
        let t2 = shift_bits_back(other.t, self.l);
        // A^{i₁}B^{j₁}C^{k₁} m₂' (A^{i₁}B^{j₁}C^{k₁})⁻¹ through the kernel family
        let m2 = MEndo::p_family(
            -i64::from(self.t[0]),
            -i64::from(self.t[1]),
            -i64::from(self.t[2]),
        )
        .apply(&m2);
        let mut m = self.m.mul(&m2);
        // fold the bit squares: A² = Z², B² = X², C² = Y²
        if self.t[0] && t2[0] {
            m = m.mul(&MElem::new(0, 0, 2));
        }
        if self.t[1] && t2[1] {
            m = m.mul(&MElem::new(2, 0, 0));
        }
        if self.t[2] && t2[2] {
            m = m.mul(&MElem::new(0, 2, 0));
        }
        GElem {
            m,
            t: [self.t[0] ^ t2[0], self.t[1] ^ t2[1], self.t[2] ^ t2[2]],
            l: (self.l + other.l) % 3,
        }
    }

    pub fn ginv(&self) -> GElem {
        // (m T D^ℓ)⁻¹ = D^{-ℓ} T⁻¹ m⁻¹, renormalized by two products;
        // T⁻¹ = A^{-i}B^{-j}C^{-k} = X^{-2j} Y^{-2k} Z^{-2i} A^i B^j C^k
        let d_part = GElem {
            m: MElem::identity(),
            t: [false; 3],
            l: (3 - self.l) % 3,
        };
        let t_part = GElem {
            m: MElem::new(
                -2 * i64::from(self.t[1]),
                -2 * i64::from(self.t[2]),
                -2 * i64::from(self.t[0]),
            ),
            t: self.t,
            l: 0,
        };
        let m_part = GElem {
            m: self.m.inv(),
            t: [false; 3],
            l: 0,
        };
        d_part.gmul(&t_part).gmul(&m_part)
    }

    pub fn gpow(&self, n: &BigInt) -> GElem {
        if n.is_negative() {
            return self.ginv().gpow(&-n);
        }
        let mut acc = GElem::identity();
        let mut base = self.clone();
        let mut n = n.clone();
        while !n.is_zero() {
            if n.is_odd() {
                acc = acc.gmul(&base);
            }
            base = base.gmul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn gpow_i64(&self, n: i64) -> GElem {
        self.gpow(&BigInt::from(n))
    }

    /// Conjugate self^g = g⁻¹·self·g.
    pub fn conj(&self, g: &GElem) -> GElem {
        g.ginv().gmul(self).gmul(g)
    }

    /// Commutator [self, h].
    pub fn comm(&self, h: &GElem) -> GElem {
        self.ginv().gmul(&h.ginv()).gmul(self).gmul(h)
    }

    /// The automorphism of M this element denotes: the composite (left to
    /// right) of conjugation by x^a y^b z^c, the kernel map with parameters
    /// (i, j, k), and θ^ℓ. Always passes the relation check.
    pub fn semantic(&self) -> MEndo {
        let inner = MEndo::inner(&self.m);
        let kernel = MEndo::p_family(
            i64::from(self.t[0]),
            i64::from(self.t[1]),
            i64::from(self.t[2]),
        );
        inner
            .compose(&kernel)
            .compose(&MEndo::theta().pow(u32::from(self.l)))
    }

    pub fn to_word(&self) -> Word {
        let mut w = Word::empty();
        for (c, e) in [('X', &self.m.i), ('Y', &self.m.j), ('Z', &self.m.k)] {
            let e = i64::try_from(e).expect("exponent does not fit a word letter");
            w.push(crate::word::Gen(c), e);
        }
        for (c, bit) in [('A', self.t[0]), ('B', self.t[1]), ('C', self.t[2])] {
            w.push(crate::word::Gen(c), i64::from(bit));
        }
        w.push(crate::word::Gen('D'), i64::from(self.l));
        w
    }
}

impl fmt::Display for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<BigInt> = self.t.iter().map(|b| BigInt::from(i32::from(*b))).collect();
        let l = BigInt::from(self.l);
        fmt_word(
            f,
            &[
                ("X", &self.m.i),
                ("Y", &self.m.j),
                ("Z", &self.m.k),
                ("A", &bits[0]),
                ("B", &bits[1]),
                ("C", &bits[2]),
                ("D", &l),
            ],
        )
    }
}

/// θ^{-ℓ} as an endomorphism, the conjugation action of D^ℓ on the inner copy.
fn theta_conj_back(l: u8) -> MEndo {
    MEndo::theta().pow(u32::from((3 - l) % 3))
}

/// Conjugation of A^i B^j C^k by D^{-ℓ}: the bit triple cycles backwards.
fn shift_bits_back(t: [bool; 3], l: u8) -> [bool; 3] {
    match l % 3 {
        0 => t,
        1 => [t[1], t[2], t[0]],
        2 => [t[2], t[0], t[1]],
        _ => unreachable!(),
    }
}

/// Evaluates a G-word with the collection product.
pub fn eval_word(w: &Word) -> GElem {
    let mut acc = GElem::identity();
    for l in w.letters() {
        let gen = match l.gen.0 {
            'X' => GElem::gen_x(),
            'Y' => GElem::gen_y(),
            'Z' => GElem::gen_z(),
            'A' => GElem::gen_a(),
            'B' => GElem::gen_b(),
            'C' => GElem::gen_c(),
            'D' => GElem::gen_d(),
            c => panic!("not a G generator: {c}"),
        };
        acc = acc.gmul(&gen.gpow_i64(l.exp));
    }
    acc
}

/// Evaluates a G-word as an automorphism of M, composing concrete generator
/// endomorphisms and their known inverses. This route never touches `gmul`,
/// which is the point: it is the independent side of the functor law.
pub fn semantic_of_word(w: &Word) -> MEndo {
    let mut acc = MEndo::identity();
    for l in w.letters() {
        let (fwd, bwd) = match l.gen.0 {
            'X' => (
                MEndo::inner(&MElem::gen_x()),
                MEndo::inner(&MElem::gen_x().inv()),
            ),
            'Y' => (
                MEndo::inner(&MElem::gen_y()),
                MEndo::inner(&MElem::gen_y().inv()),
            ),
            'Z' => (
                MEndo::inner(&MElem::gen_z()),
                MEndo::inner(&MElem::gen_z().inv()),
            ),
            'A' => (MEndo::p_family(1, 0, 0), MEndo::p_family(-1, 0, 0)),
            'B' => (MEndo::p_family(0, 1, 0), MEndo::p_family(0, -1, 0)),
            'C' => (MEndo::p_family(0, 0, 1), MEndo::p_family(0, 0, -1)),
            'D' => (MEndo::theta(), MEndo::theta().pow(2)),
            c => panic!("not a G generator: {c}"),
        };
        let step = if l.exp >= 0 { fwd } else { bwd };
        for _ in 0..l.exp.unsigned_abs() {
            acc = acc.compose(&step);
        }
    }
    acc
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("endomorphism is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("automorphism acts on M/M² outside the cyclic image: {0}")]
    UnexpectedCosetAction(String),
    #[error("kernel part does not have the classified shape: {0}")]
    ShapeMismatch(String),
    #[error("solved normal form fails verification: {0}")]
    Verification(String),
}

/// Recovers the unique normal form with `semantic(recognize(e)) = e`.
///
/// The D-exponent is read off the induced coset permutation; what remains
/// lies in the kernel of Λ and so has images x ↦ x^{±1}z^{2C},
/// y ↦ y^{±1}x^{2D'}, z ↦ z^{±1}y^{2G}, from which the exponents are solved
/// exactly. Failure here means the input is an automorphism outside the
/// group generated by X, A, D, which the classification rules out; it aborts
/// verification rather than being papered over.
pub fn recognize(e: &MEndo) -> Result<GElem, RecognizeError> {
    if let Err(r) = e.relation_check() {
        return Err(RecognizeError::NotAutomorphism(format!("violates {r}")));
    }
    if !e.is_automorphism() {
        return Err(RecognizeError::NotAutomorphism(format!(
            "not bijective: {e}"
        )));
    }
    let perm = e.lambda_perm();
    let l: u8 = match perm.image(CosetClass::X) {
        CosetClass::X => 0,
        CosetClass::Y => 1,
        CosetClass::Z => 2,
        other => {
            return Err(RecognizeError::UnexpectedCosetAction(format!(
                "x-coset maps to {other}"
            )))
        }
    };
    let e1 = e.compose(&MEndo::theta().pow(u32::from((3 - l) % 3)));
    let (ex, ey, ez) = (&e1.img_x, &e1.img_y, &e1.img_z);
    let shape_ok = ex.j.is_zero()
        && ex.i.abs() == 1.into()
        && ex.k.is_even()
        && ey.k.is_zero()
        && ey.j.abs() == 1.into()
        && ey.i.is_even()
        && ez.i.is_zero()
        && ez.k.abs() == 1.into()
        && ez.j.is_even();
    if !shape_ok {
        return Err(RecognizeError::ShapeMismatch(format!("{e1}")));
    }
    let b_odd = ex.i.is_negative();
    let c_odd = ey.j.is_negative();
    let a_odd = ez.k.is_negative();
    let par_c: BigInt = &ex.k >> 1i32; // C with x ↦ x^{±1} z^{2C}
    let par_d: BigInt = -(&ey.i >> 1i32); // D' with y ↦ y^{±1} x^{2D'}
    let par_g: BigInt = -(&ez.j >> 1i32); // G with z ↦ z^{±1} y^{2G}

    let i_bit = par_c.is_odd() != c_odd;
    let c = &par_c - BigInt::from(i32::from(i_bit));
    let j_bit = par_d.is_odd() != a_odd;
    let a = {
        let v = &par_d - BigInt::from(i32::from(j_bit));
        if b_odd {
            -v
        } else {
            v
        }
    };
    let k_bit = par_g.is_odd() != b_odd;
    let b = {
        let v = &par_g - BigInt::from(i32::from(k_bit));
        if c_odd {
            -v
        } else {
            v
        }
    };
    let cand = GElem {
        m: MElem { i: a, j: b, k: c },
        t: [i_bit, j_bit, k_bit],
        l,
    };
    if &cand.semantic() == e {
        Ok(cand)
    } else {
        Err(RecognizeError::Verification(format!(
            "candidate {cand} for {e}"
        )))
    }
}

/// The structural subgroups of G with closed-form membership.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GSubgroup {
    /// Inn(M) = ⟨X, Y, Z⟩.
    InnM,
    /// K = ker(Aut(M) → Aut(M/M²)).
    Kernel,
    /// R = ⟨A, B, C⟩, free abelian of rank 3.
    R,
    /// U = ⟨X, Y, Z, A, B, C⟩, the unique index-3 subgroup.
    U,
    /// [G, G] = ⟨XY, YZ, ZX, AB, BC, CA⟩.
    Derived,
    /// G² = ⟨XY, YZ, ZX, AB, BC, CA, D⟩.
    Squares,
}

pub fn subgroup_membership(g: &GElem, s: GSubgroup) -> bool {
    let m_even = g.m.in_m2();
    let abc_sum_even = (&g.m.i + &g.m.j + &g.m.k).is_even();
    let bits_sum_even = (g.t.iter().filter(|b| **b).count()) % 2 == 0;
    match s {
        GSubgroup::InnM => g.t == [false; 3] && g.l == 0,
        GSubgroup::Kernel => g.l == 0,
        GSubgroup::R => m_even && g.l == 0,
        GSubgroup::U => g.l == 0,
        GSubgroup::Derived => abc_sum_even && bits_sum_even && g.l == 0,
        GSubgroup::Squares => abc_sum_even && bits_sum_even,
    }
}

/// Defining relations of G as word pairs (lhs, rhs), suitable for checking
/// under both multiplication routes.
pub const DEFINING_RELATIONS: &[(&str, &str, &str)] = &[
    ("X^Y = X^-1", "Y^-1 X Y", "X^-1"),
    ("X^D = Y", "D^-1 X D", "Y"),
    ("Y^D = Z", "D^-1 Y D", "Z"),
    ("Z^D = X", "D^-1 Z D", "X"),
    ("D^3 = 1", "D D D", "1"),
    ("[A,B] = 1", "A^-1 B^-1 A B", "1"),
    ("A^D = B", "D^-1 A D", "B"),
    ("B^D = C", "D^-1 B D", "C"),
    ("C^D = A", "D^-1 C D", "A"),
    ("A^2 = Z^2", "A A", "Z^2"),
    ("X^A = XZ^2", "A^-1 X A", "X Z^2"),
    ("Y^A = Y", "A^-1 Y A", "Y"),
    ("Z^A = Z", "A^-1 Z A", "Z"),
];

/// Relations that follow from the defining ones; checked the same way.
pub const CONSEQUENCE_RELATIONS: &[(&str, &str, &str)] = &[
    ("Y^Z = Y^-1", "Z^-1 Y Z", "Y^-1"),
    ("Z^X = Z^-1", "X^-1 Z X", "Z^-1"),
    ("[B,C] = 1", "B^-1 C^-1 B C", "1"),
    ("[C,A] = 1", "C^-1 A^-1 C A", "1"),
    ("B^2 = X^2", "B B", "X^2"),
    ("C^2 = Y^2", "C C", "Y^2"),
    ("X^B = X", "B^-1 X B", "X"),
    ("Y^B = YX^2", "B^-1 Y B", "Y X^2"),
    ("Z^B = Z", "B^-1 Z B", "Z"),
    ("X^C = X", "C^-1 X C", "X"),
    ("Y^C = Y", "C^-1 Y C", "Y"),
    ("Z^C = ZY^2", "C^-1 Z C", "Z Y^2"),
];

/// The commutator subgroup of Q = ⟨gens, M²⟩ as a sublattice of M², for
/// subgroups whose image in U/M² is abelian (so that [Q,Q] ⊆ M²).
///
/// Pairwise commutators of the generators (including the basis of M², since
/// M² need not be central in Q) seed the lattice, which is then closed under
/// conjugation by the generators.
pub fn commutator_lattice(gens: &[GElem]) -> crate::zlattice::Lattice3 {
    let mut all = gens.to_vec();
    all.push(GElem::from_parts(2, 0, 0, false, false, false, 0));
    all.push(GElem::from_parts(0, 2, 0, false, false, false, 0));
    all.push(GElem::from_parts(0, 0, 2, false, false, false, 0));
    let mut lat = crate::zlattice::Lattice3::empty();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            let c = all[i].comm(&all[j]);
            assert!(
                c.t == [false; 3] && c.l == 0 && c.m.in_m2(),
                "generator commutator escapes M^2: {c}"
            );
            lat.add_row(c.m.m2_coords());
        }
    }
    // conjugation closure; the action on M² settles after a few rounds and
    // the final pass certifies stability
    for round in 0..16 {
        let mut changed = false;
        for g in &all {
            for r in lat.rows().to_vec() {
                let e = GElem {
                    m: MElem::from_m2_coords(&r),
                    t: [false; 3],
                    l: 0,
                };
                for image in [e.conj(g), e.conj(&g.ginv())] {
                    if !lat.contains(&image.m.m2_coords()) {
                        lat.add_row(image.m.m2_coords());
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return lat;
        }
        assert!(round < 15, "commutator lattice failed to stabilize");
    }
    lat
}

/// Checks one relation under collection arithmetic and under the semantic
/// functor; both must agree for the relation to count as holding.
pub fn relation_holds(lhs: &str, rhs: &str) -> bool {
    let wl = crate::word::parse_word(lhs, GroupId::G).expect("bad relation word");
    let wr = crate::word::parse_word(rhs, GroupId::G).expect("bad relation word");
    eval_word(&wl) == eval_word(&wr) && semantic_of_word(&wl) == semantic_of_word(&wr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::rand_gelem;
    use crate::word::{collect, parse_word, random_word_with};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn defining_and_consequence_relations_hold() {
        for (name, lhs, rhs) in DEFINING_RELATIONS.iter().chain(CONSEQUENCE_RELATIONS) {
            assert!(relation_holds(lhs, rhs), "relation {name} fails");
        }
    }

    #[test]
    fn gmul_examples() {
        let w = parse_word("Y^-1 X Y", GroupId::G).unwrap();
        assert_eq!(
            eval_word(&w),
            GElem::from_parts(-1, 0, 0, false, false, false, 0)
        );
        assert_eq!(
            GElem::gen_a().gmul(&GElem::gen_a()),
            GElem::from_parts(0, 0, 2, false, false, false, 0)
        );
        assert_eq!(GElem::gen_d().gpow_i64(3), GElem::identity());
    }

    #[test]
    fn inverse_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..300 {
            let g = rand_gelem(&mut rng, 8);
            assert!(g.gmul(&g.ginv()).is_identity());
            assert!(g.ginv().gmul(&g).is_identity());
        }
    }

    #[test]
    fn associativity_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..300 {
            let a = rand_gelem(&mut rng, 6);
            let b = rand_gelem(&mut rng, 6);
            let c = rand_gelem(&mut rng, 6);
            assert_eq!(a.gmul(&b).gmul(&c), a.gmul(&b.gmul(&c)));
        }
    }

    #[test]
    fn semantic_examples() {
        assert_eq!(GElem::gen_d().semantic(), MEndo::theta());
        assert_eq!(GElem::gen_a().semantic(), MEndo::p_family(1, 0, 0));
        assert_eq!(GElem::gen_x().semantic(), MEndo::inner(&MElem::gen_x()));
    }

    #[test]
    fn functor_law_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..300 {
            let g = rand_gelem(&mut rng, 5);
            let h = rand_gelem(&mut rng, 5);
            assert_eq!(
                g.gmul(&h).semantic(),
                g.semantic().compose(&h.semantic()),
                "functor law fails for {g} and {h}"
            );
        }
    }

    #[test]
    fn recognize_roundtrip() {
        assert_eq!(recognize(&MEndo::theta()).unwrap(), GElem::gen_d());
        let xy = MEndo::inner(&MElem::new(1, 1, 0));
        assert_eq!(
            recognize(&xy).unwrap(),
            GElem::from_parts(1, 1, 0, false, false, false, 0)
        );
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..500 {
            let g = rand_gelem(&mut rng, 8);
            assert_eq!(
                recognize(&g.semantic()).unwrap(),
                g,
                "roundtrip fails for {g}"
            );
        }
    }

    #[test]
    fn recognize_rejects_non_automorphisms() {
        let e = MEndo::new(MElem::new(2, 0, 0), MElem::gen_y(), MElem::gen_z());
        assert!(matches!(
            recognize(&e),
            Err(RecognizeError::NotAutomorphism(_))
        ));
    }

    #[test]
    fn gmul_agrees_with_collector() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..400 {
            let w = random_word_with(&mut rng, GroupId::G, 10, 3);
            let fast = eval_word(&w);
            let slow = collect(&w, GroupId::G);
            assert_eq!(fast.to_word(), slow, "collector disagrees on {w}");
        }
    }

    #[test]
    fn membership_predicates() {
        let xy = GElem::from_parts(1, 1, 0, false, false, false, 0);
        assert!(subgroup_membership(&xy, GSubgroup::Derived));
        assert!(subgroup_membership(&GElem::gen_d(), GSubgroup::Squares));
        assert!(!subgroup_membership(&GElem::gen_d(), GSubgroup::Derived));
        assert!(subgroup_membership(&GElem::gen_a(), GSubgroup::R));
        assert!(!subgroup_membership(&GElem::gen_x(), GSubgroup::R));
    }

    #[test]
    fn display_normal_form() {
        let g = GElem::from_parts(2, -1, 0, true, false, true, 2);
        assert_eq!(g.to_string(), "X^2 Y^-1 A C D^2");
        assert_eq!(GElem::identity().to_string(), "1");
    }
}
