//! Exact arithmetic for the Mennicke group M = M(-1,-1,-1).
//!
//! M is presented by ⟨x, y, z | x^y = x⁻¹, y^z = y⁻¹, z^x = z⁻¹⟩ and every
//! element has a unique normal form x^i y^j z^k, so an element is just an
//! integer triple. The closed-form product implemented here was derived by
//! collecting x^{i₁}y^{j₁}z^{k₁} · x^{i₂}y^{j₂}z^{k₂} with the conjugation
//! identities
//!
//!   (z^c)^(x^a) = z^{c(-1)^a},  (x^a)^(y^b) = x^{a(-1)^b},  (y^b)^(z^c) = y^{b(-1)^c},
//!
//! and is cross-validated against the rewriting collector in [`crate::word`].
//!
//! Throughout the crate: [a,b] = a⁻¹b⁻¹ab, b^a = a⁻¹ba, and composition of
//! maps reads left to right.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Element of M in normal-form coordinates (i, j, k) for x^i y^j z^k.
///
/// Every integer triple is a valid element; exponents are arbitrary-precision
/// so that powers and long collections can never overflow.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MElem {
    pub i: BigInt,
    pub j: BigInt,
    pub k: BigInt,
}

/// `v` negated when `by` is odd, i.e. v·(-1)^by.
fn flip(v: &BigInt, by: &BigInt) -> BigInt {
    if by.is_odd() {
        -v
    } else {
        v.clone()
    }
}

/// Order of an element of M: the identity, an involution, or infinite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    One,
    Two,
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::One => write!(f, "1"),
            Order::Two => write!(f, "2"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

/// One of the 8 cosets of M² in M, labelled by the parity triple of the
/// normal form. M/M² ≅ C₂×C₂×C₂.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CosetClass {
    One,
    X,
    Y,
    Z,
    Xy,
    Yz,
    Zx,
    Xyz,
}

impl CosetClass {
    pub const ALL: [CosetClass; 8] = [
        CosetClass::One,
        CosetClass::X,
        CosetClass::Y,
        CosetClass::Z,
        CosetClass::Xy,
        CosetClass::Yz,
        CosetClass::Zx,
        CosetClass::Xyz,
    ];

    pub fn from_parities(pi: bool, pj: bool, pk: bool) -> CosetClass {
        match (pi, pj, pk) {
            (false, false, false) => CosetClass::One,
            (true, false, false) => CosetClass::X,
            (false, true, false) => CosetClass::Y,
            (false, false, true) => CosetClass::Z,
            (true, true, false) => CosetClass::Xy,
            (false, true, true) => CosetClass::Yz,
            (true, false, true) => CosetClass::Zx,
            (true, true, true) => CosetClass::Xyz,
        }
    }

    pub fn parities(self) -> (bool, bool, bool) {
        match self {
            CosetClass::One => (false, false, false),
            CosetClass::X => (true, false, false),
            CosetClass::Y => (false, true, false),
            CosetClass::Z => (false, false, true),
            CosetClass::Xy => (true, true, false),
            CosetClass::Yz => (false, true, true),
            CosetClass::Zx => (true, false, true),
            CosetClass::Xyz => (true, true, true),
        }
    }

    /// A representative element of the coset.
    pub fn rep(self) -> MElem {
        let (pi, pj, pk) = self.parities();
        MElem::new(i64::from(pi), i64::from(pj), i64::from(pk))
    }

    /// Index in `ALL`; used by permutation and orbit code.
    pub fn index(self) -> usize {
        CosetClass::ALL.iter().position(|c| *c == self).unwrap()
    }

    /// Coset multiplication, i.e. coordinatewise xor in C₂×C₂×C₂.
    pub fn xor(self, other: CosetClass) -> CosetClass {
        let (a, b, c) = self.parities();
        let (d, e, g) = other.parities();
        CosetClass::from_parities(a ^ d, b ^ e, c ^ g)
    }
}

impl fmt::Display for CosetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CosetClass::One => "1",
            CosetClass::X => "x",
            CosetClass::Y => "y",
            CosetClass::Z => "z",
            CosetClass::Xy => "xy",
            CosetClass::Yz => "yz",
            CosetClass::Zx => "zx",
            CosetClass::Xyz => "xyz",
        };
        write!(f, "{s}")
    }
}

impl MElem {
    pub fn new(i: i64, j: i64, k: i64) -> MElem {
        MElem {
            i: BigInt::from(i),
            j: BigInt::from(j),
            k: BigInt::from(k),
        }
    }

    pub fn identity() -> MElem {
        MElem::new(0, 0, 0)
    }

    pub fn gen_x() -> MElem {
        MElem::new(1, 0, 0)
    }

    pub fn gen_y() -> MElem {
        MElem::new(0, 1, 0)
    }

    pub fn gen_z() -> MElem {
        MElem::new(0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    /// Closed-form product: (i₁ + i₂(-1)^{j₁}, j₁ + j₂(-1)^{k₁}, k₁(-1)^{i₂} + k₂).
    pub fn mul(&self, q: &MElem) -> MElem {
        MElem {
            i: &self.i + flip(&q.i, &self.j),
            j: &self.j + flip(&q.j, &self.k),
            k: flip(&self.k, &q.i) + &q.k,
        }
    }

    /// Inverse: (-i(-1)^j, -j(-1)^k, -k(-1)^i), obtained by solving mul(p, q) = 1.
    pub fn inv(&self) -> MElem {
        MElem {
            i: -flip(&self.i, &self.j),
            j: -flip(&self.j, &self.k),
            k: -flip(&self.k, &self.i),
        }
    }

    /// Conjugate self^g = g⁻¹·self·g.
    pub fn conj(&self, g: &MElem) -> MElem {
        g.inv().mul(self).mul(g)
    }

    /// Commutator [self, q] = self⁻¹ q⁻¹ self q.
    pub fn comm(&self, q: &MElem) -> MElem {
        self.inv().mul(&q.inv()).mul(self).mul(q)
    }

    /// Power by repeated squaring; negative exponents go through the inverse.
    pub fn pow(&self, n: &BigInt) -> MElem {
        if n.is_negative() {
            return self.inv().pow(&-n);
        }
        let mut acc = MElem::identity();
        let mut base = self.clone();
        let mut n = n.clone();
        while !n.is_zero() {
            if n.is_odd() {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn pow_i64(&self, n: i64) -> MElem {
        self.pow(&BigInt::from(n))
    }

    /// The order of the element: 1 for the identity, 2 exactly when all three
    /// exponents are odd (the coset xyzM²), infinite otherwise.
    pub fn order(&self) -> Order {
        if self.is_identity() {
            Order::One
        } else if self.i.is_odd() && self.j.is_odd() && self.k.is_odd() {
            Order::Two
        } else {
            Order::Infinite
        }
    }

    pub fn coset_class(&self) -> CosetClass {
        CosetClass::from_parities(self.i.is_odd(), self.j.is_odd(), self.k.is_odd())
    }

    /// Membership in M² = [M,M] = ⟨x², y², z²⟩: all exponents even.
    pub fn in_m2(&self) -> bool {
        self.i.is_even() && self.j.is_even() && self.k.is_even()
    }

    /// Membership in the index-2 subgroup V = ⟨xy, yz, zx⟩: even exponent sum.
    pub fn in_v(&self) -> bool {
        (&self.i + &self.j + &self.k).is_even()
    }

    /// Membership in the lower central term γ_n(M) = ⟨x^{2^{n-1}}, y^{2^{n-1}}, z^{2^{n-1}}⟩.
    pub fn in_gamma(&self, n: u32) -> bool {
        assert!(n >= 1, "gamma terms are indexed from 1");
        let d = BigInt::one() << (n - 1);
        (&self.i % &d).is_zero() && (&self.j % &d).is_zero() && (&self.k % &d).is_zero()
    }

    /// Exact center test: self commutes with the three generators. Commuting
    /// with x forces j even and k = 0, with y forces i = 0 and k even, with z
    /// forces j = 0 and i even, so only the identity passes.
    pub fn is_central(&self) -> bool {
        self.comm(&MElem::gen_x()).is_identity()
            && self.comm(&MElem::gen_y()).is_identity()
            && self.comm(&MElem::gen_z()).is_identity()
    }

    /// Half-coordinates (i/2, j/2, k/2) of an element of M², in the basis
    /// {x², y², z²}. Panics when the element is not in M².
    pub fn m2_coords(&self) -> [BigInt; 3] {
        assert!(self.in_m2(), "element is not in M^2: {self}");
        [&self.i >> 1, &self.j >> 1, &self.k >> 1]
    }

    pub fn from_m2_coords(v: &[BigInt; 3]) -> MElem {
        MElem {
            i: &v[0] << 1,
            j: &v[1] << 1,
            k: &v[2] << 1,
        }
    }
}

impl fmt::Display for MElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(f, &[("x", &self.i), ("y", &self.j), ("z", &self.k)])
    }
}

/// Shared normal-form printer: skips zero exponents, prints bare generators
/// for exponent 1, and "1" for the identity.
pub(crate) fn fmt_word(f: &mut fmt::Formatter<'_>, parts: &[(&str, &BigInt)]) -> fmt::Result {
    let mut first = true;
    for (name, e) in parts {
        if e.is_zero() {
            continue;
        }
        if !first {
            write!(f, " ")?;
        }
        first = false;
        if e.is_one() {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

/// Element u^i v^j of the infinite dihedral group D∞ = ⟨u, v | u^v = u⁻¹, v² = 1⟩.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DInfElem {
    pub i: BigInt,
    pub j: bool,
}

impl DInfElem {
    pub fn new(i: i64, j: bool) -> DInfElem {
        DInfElem {
            i: BigInt::from(i),
            j,
        }
    }

    pub fn identity() -> DInfElem {
        DInfElem::new(0, false)
    }

    pub fn gen_u() -> DInfElem {
        DInfElem::new(1, false)
    }

    pub fn gen_v() -> DInfElem {
        DInfElem::new(0, true)
    }

    /// Dihedral law (i, j)(k, l) = (i + k(-1)^j, j ⊕ l).
    pub fn mul(&self, q: &DInfElem) -> DInfElem {
        DInfElem {
            i: if self.j {
                &self.i - &q.i
            } else {
                &self.i + &q.i
            },
            j: self.j ^ q.j,
        }
    }

    pub fn pow(&self, n: &BigInt) -> DInfElem {
        if self.j {
            // reflections have order 2
            if n.is_odd() {
                self.clone()
            } else {
                DInfElem::identity()
            }
        } else {
            DInfElem {
                i: &self.i * n,
                j: false,
            }
        }
    }
}

impl fmt::Display for DInfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = BigInt::from(i32::from(self.j));
        fmt_word(f, &[("u", &self.i), ("v", &j)])
    }
}

/// The three epimorphisms M → D∞ witnessing uniqueness of the normal form,
/// evaluated homomorphically from their generator images.
fn dinf_epi(p: &MElem, img_x: &DInfElem, img_y: &DInfElem, img_z: &DInfElem) -> DInfElem {
    img_x.pow(&p.i).mul(&img_y.pow(&p.j)).mul(&img_z.pow(&p.k))
}

/// f₁: x ↦ u, y ↦ v, z ↦ 1.
pub fn f1(p: &MElem) -> DInfElem {
    dinf_epi(
        p,
        &DInfElem::gen_u(),
        &DInfElem::gen_v(),
        &DInfElem::identity(),
    )
}

/// f₂: x ↦ 1, y ↦ u, z ↦ v.
pub fn f2(p: &MElem) -> DInfElem {
    dinf_epi(
        p,
        &DInfElem::identity(),
        &DInfElem::gen_u(),
        &DInfElem::gen_v(),
    )
}

/// f₃: x ↦ v, y ↦ 1, z ↦ u.
pub fn f3(p: &MElem) -> DInfElem {
    dinf_epi(
        p,
        &DInfElem::gen_v(),
        &DInfElem::identity(),
        &DInfElem::gen_u(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::rand_melem;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generator_relations() {
        let (x, y, z) = (MElem::gen_x(), MElem::gen_y(), MElem::gen_z());
        assert_eq!(x.conj(&y), x.inv());
        assert_eq!(y.conj(&z), y.inv());
        assert_eq!(z.conj(&x), z.inv());
    }

    #[test]
    fn commutator_squares() {
        let (x, y, z) = (MElem::gen_x(), MElem::gen_y(), MElem::gen_z());
        assert_eq!(y.comm(&x), x.mul(&x));
        assert_eq!(z.comm(&y), y.mul(&y));
        assert_eq!(x.comm(&z), z.mul(&z));
    }

    #[test]
    fn derived_product_example() {
        // (xy)(zx) = y z^-1, checked against the collector by hand first
        let xy = MElem::new(1, 1, 0);
        let zx = MElem::new(1, 0, -1);
        assert_eq!(xy.mul(&zx), MElem::new(0, 1, -1));
    }

    #[test]
    fn xyz_is_an_involution() {
        let p = MElem::new(1, 1, 1);
        assert_eq!(p.mul(&p), MElem::identity());
        assert_eq!(p.order(), Order::Two);
        assert_eq!(MElem::new(-1, 1, 1).order(), Order::Two);
    }

    #[test]
    fn orders() {
        assert_eq!(MElem::identity().order(), Order::One);
        assert_eq!(MElem::gen_x().order(), Order::Infinite);
        assert_eq!(MElem::new(2, 0, 0).order(), Order::Infinite);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(MElem::new(1, 1, 0).inv(), MElem::new(1, -1, 0));
        assert_eq!(MElem::identity().inv(), MElem::identity());
        assert_eq!(MElem::new(2, 0, 0).inv(), MElem::new(-2, 0, 0));
    }

    #[test]
    fn conjugation_formula_z_by_x() {
        // (z^c)^(x^a) = z^{c(-1)^a}
        for c in -3i64..=3 {
            for a in -3i64..=3 {
                let lhs = MElem::new(0, 0, c).conj(&MElem::new(a, 0, 0));
                let expect = MElem::new(0, 0, if a % 2 != 0 { -c } else { c });
                assert_eq!(lhs, expect);
            }
        }
    }

    #[test]
    fn coset_classes() {
        assert_eq!(MElem::new(3, -2, 5).coset_class(), CosetClass::Zx);
        assert!(MElem::new(0, 2, -4).in_m2());
        assert!(MElem::new(1, 1, 0).in_v());
        assert!(!MElem::new(1, 0, 0).in_v());
        assert!(MElem::new(4, 4, -8).in_gamma(3));
        assert!(!MElem::new(4, 4, -8).in_gamma(4));
    }

    #[test]
    fn center_is_trivial() {
        assert!(MElem::identity().is_central());
        assert!(!MElem::new(0, 2, 0).is_central());
        assert!(!MElem::new(2, 0, 0).is_central());
        for i in -4i64..=4 {
            for j in -4i64..=4 {
                for k in -4i64..=4 {
                    let p = MElem::new(i, j, k);
                    assert_eq!(p.is_central(), p.is_identity());
                }
            }
        }
    }

    #[test]
    fn dinf_images() {
        let p = MElem::new(1, 1, 1);
        assert_eq!(f1(&p), DInfElem::new(1, true));
        assert_eq!(f2(&p), DInfElem::new(1, true));
        let uv = DInfElem::gen_u().mul(&DInfElem::gen_v());
        assert_eq!(uv.mul(&uv), DInfElem::identity());
    }

    #[test]
    fn f_epimorphisms_preserve_relations() {
        for f in [f1, f2, f3] {
            let fx = f(&MElem::gen_x());
            let fy = f(&MElem::gen_y());
            let fz = f(&MElem::gen_z());
            let conj = |a: &DInfElem, b: &DInfElem| b.pow(&BigInt::from(-1)).mul(a).mul(b);
            assert_eq!(conj(&fx, &fy), fx.pow(&BigInt::from(-1)));
            assert_eq!(conj(&fy, &fz), fy.pow(&BigInt::from(-1)));
            assert_eq!(conj(&fz, &fx), fz.pow(&BigInt::from(-1)));
        }
    }

    #[test]
    fn squares_land_in_m2_and_torsion_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2000 {
            let p = rand_melem(&mut rng, 20);
            let sq = p.mul(&p);
            assert!(sq.in_m2());
            match p.order() {
                Order::One => assert!(p.is_identity()),
                Order::Two => assert!(sq.is_identity()),
                Order::Infinite => assert!(!sq.is_identity() || p.is_identity()),
            }
        }
    }

    proptest! {
        #[test]
        fn associativity(a in -40i64..40, b in -40i64..40, c in -40i64..40,
                         d in -40i64..40, e in -40i64..40, f in -40i64..40,
                         g in -40i64..40, h in -40i64..40, i in -40i64..40) {
            let p = MElem::new(a, b, c);
            let q = MElem::new(d, e, f);
            let r = MElem::new(g, h, i);
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        }

        #[test]
        fn inverse_and_identity_laws(a in -40i64..40, b in -40i64..40, c in -40i64..40) {
            let p = MElem::new(a, b, c);
            prop_assert_eq!(p.mul(&p.inv()), MElem::identity());
            prop_assert_eq!(p.inv().mul(&p), MElem::identity());
            prop_assert_eq!(p.mul(&MElem::identity()), p.clone());
            prop_assert_eq!(MElem::identity().mul(&p), p);
        }

        #[test]
        fn pow_matches_iterated_product(a in -6i64..6, b in -6i64..6, c in -6i64..6, n in -12i64..12) {
            let p = MElem::new(a, b, c);
            let mut acc = MElem::identity();
            let step = if n >= 0 { p.clone() } else { p.inv() };
            for _ in 0..n.abs() {
                acc = acc.mul(&step);
            }
            prop_assert_eq!(p.pow_i64(n), acc);
        }
    }
}
