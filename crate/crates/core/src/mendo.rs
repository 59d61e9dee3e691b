//! Endomorphisms of M given by generator images, with automorphism and
//! inner-ness decisions and the induced action on M/M².
//!
//! An endomorphism is stored as the images of x, y, z. Whether an assignment
//! extends to an endomorphism at all is exactly the question of whether the
//! three defining relations are preserved, which [`MEndo::relation_check`]
//! settles with exact arithmetic.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::mgroup::{CosetClass, MElem};

/// Endomorphism of M recorded by the images of x, y, z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MEndo {
    pub img_x: MElem,
    pub img_y: MElem,
    pub img_z: MElem,
}

/// Which defining relation an assignment violates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationId {
    XConjY,
    YConjZ,
    ZConjX,
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationId::XConjY => "x^y = x^-1",
            RelationId::YConjZ => "y^z = y^-1",
            RelationId::ZConjX => "z^x = z^-1",
        };
        write!(f, "{s}")
    }
}

impl MEndo {
    pub fn new(img_x: MElem, img_y: MElem, img_z: MElem) -> MEndo {
        MEndo {
            img_x,
            img_y,
            img_z,
        }
    }

    /// Constructor that admits only genuine homomorphisms.
    pub fn checked(img_x: MElem, img_y: MElem, img_z: MElem) -> Result<MEndo, RelationId> {
        let e = MEndo::new(img_x, img_y, img_z);
        e.relation_check()?;
        Ok(e)
    }

    pub fn identity() -> MEndo {
        MEndo::new(MElem::gen_x(), MElem::gen_y(), MElem::gen_z())
    }

    /// θ: x ↦ y, y ↦ z, z ↦ x.
    pub fn theta() -> MEndo {
        MEndo::new(MElem::gen_y(), MElem::gen_z(), MElem::gen_x())
    }

    /// The kernel family x ↦ xz^{2c}, y ↦ yx^{2d}, z ↦ zy^{2g}; composition
    /// of the family is addition of parameter triples. In normal coordinates
    /// yx^{2d} = x^{-2d}y and zy^{2g} = y^{-2g}z.
    pub fn p_family(c: i64, d: i64, g: i64) -> MEndo {
        MEndo::new(
            MElem::new(1, 0, 2 * c),
            MElem::new(-2 * d, 1, 0),
            MElem::new(0, -2 * g, 1),
        )
    }

    /// Checks that the images satisfy the defining relations of M; returns
    /// the first violated relation otherwise.
    pub fn relation_check(&self) -> Result<(), RelationId> {
        if self.img_x.conj(&self.img_y) != self.img_x.inv() {
            return Err(RelationId::XConjY);
        }
        if self.img_y.conj(&self.img_z) != self.img_y.inv() {
            return Err(RelationId::YConjZ);
        }
        if self.img_z.conj(&self.img_x) != self.img_z.inv() {
            return Err(RelationId::ZConjX);
        }
        Ok(())
    }

    /// Homomorphic extension to all of M: x^i y^j z^k ↦ X^i Y^j Z^k.
    pub fn apply(&self, p: &MElem) -> MElem {
        self.img_x
            .pow(&p.i)
            .mul(&self.img_y.pow(&p.j))
            .mul(&self.img_z.pow(&p.k))
    }

    /// Left-to-right composition: apply `self`, then `next`.
    pub fn compose(&self, next: &MEndo) -> MEndo {
        MEndo::new(
            next.apply(&self.img_x),
            next.apply(&self.img_y),
            next.apply(&self.img_z),
        )
    }

    pub fn pow(&self, n: u32) -> MEndo {
        let mut acc = MEndo::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    /// The inner automorphism g ↦ m⁻¹ g m.
    pub fn inner(m: &MElem) -> MEndo {
        MEndo::new(
            MElem::gen_x().conj(m),
            MElem::gen_y().conj(m),
            MElem::gen_z().conj(m),
        )
    }

    /// Matrix of the induced map on M² in the basis {x², y², z²}; row r holds
    /// the half-coordinates of the image of the r-th basis element, so that
    /// coordinate rows transform as v ↦ v·mat and composition reads left to
    /// right: m2(e₁ then e₂) = m2(e₁)·m2(e₂).
    pub fn m2_matrix(&self) -> M2Matrix {
        let rows = [
            self.apply(&MElem::new(2, 0, 0)).m2_coords(),
            self.apply(&MElem::new(0, 2, 0)).m2_coords(),
            self.apply(&MElem::new(0, 0, 2)).m2_coords(),
        ];
        M2Matrix { rows }
    }

    /// Matrix of the induced map on M/M² over GF(2), rows = images of the
    /// generators' parity vectors.
    pub fn mod2_matrix(&self) -> [[bool; 3]; 3] {
        let row = |p: &MElem| [p.i.is_odd(), p.j.is_odd(), p.k.is_odd()];
        [row(&self.img_x), row(&self.img_y), row(&self.img_z)]
    }

    /// Automorphism test: an endomorphism is bijective exactly when it is
    /// bijective on the verbal subgroup M² (unimodular matrix) and on M/M²
    /// (invertible over GF(2)); injectivity and surjectivity on M follow by
    /// the usual two-step argument through 1 → M² → M → M/M² → 1.
    pub fn is_automorphism(&self) -> bool {
        debug_assert!(self.relation_check().is_ok());
        let det = self.m2_matrix().det();
        if det.abs() != BigInt::one() {
            return false;
        }
        mod2_det(&self.mod2_matrix())
    }

    /// Decides whether the automorphism is inner, returning the unique
    /// conjugating element; uniqueness holds because Z(M) = 1.
    ///
    /// Conjugation by m = x^{m₁}y^{m₂}z^{m₃} sends, in normal coordinates,
    ///   x ↦ ((-1)^{m₂}, 0, 2m₃),
    ///   y ↦ (-2m₁(-1)^{m₂}, (-1)^{m₃}, 0),
    ///   z ↦ (0, -2m₂(-1)^{m₃}, (-1)^{m₁}),
    /// so the witness can be read off the images and cross-checked exactly.
    pub fn is_inner(&self) -> Option<MElem> {
        let (ex, ey, ez) = (&self.img_x, &self.img_y, &self.img_z);
        if !ex.j.is_zero() || ex.i.abs() != BigInt::one() || ex.k.is_odd() {
            return None;
        }
        if !ey.k.is_zero() || ey.j.abs() != BigInt::one() || ey.i.is_odd() {
            return None;
        }
        if !ez.i.is_zero() || ez.k.abs() != BigInt::one() || ez.j.is_odd() {
            return None;
        }
        let m2_odd = ex.i.is_negative();
        let m3_odd = ey.j.is_negative();
        let m1_odd = ez.k.is_negative();
        let m3: BigInt = &ex.k >> 1;
        if m3.is_odd() != m3_odd {
            return None;
        }
        let m1 = {
            let half: BigInt = &ey.i >> 1;
            if m2_odd {
                half
            } else {
                -half
            }
        };
        if m1.is_odd() != m1_odd {
            return None;
        }
        let m2 = {
            let half: BigInt = &ez.j >> 1;
            if m3_odd {
                half
            } else {
                -half
            }
        };
        if m2.is_odd() != m2_odd {
            return None;
        }
        let m = MElem {
            i: m1,
            j: m2,
            k: m3,
        };
        if &MEndo::inner(&m) == self {
            Some(m)
        } else {
            None
        }
    }

    /// The permutation induced on the 8 cosets of M².
    pub fn lambda_perm(&self) -> ClassPerm {
        let mut map = [0usize; 8];
        for (n, class) in CosetClass::ALL.iter().enumerate() {
            map[n] = self.apply(&class.rep()).coset_class().index();
        }
        ClassPerm(map)
    }
}

impl fmt::Display for MEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x -> {}, y -> {}, z -> {}",
            self.img_x, self.img_y, self.img_z
        )
    }
}

/// 3×3 integer matrix acting on coordinate rows of M².
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct M2Matrix {
    pub rows: [[BigInt; 3]; 3],
}

impl M2Matrix {
    pub fn identity() -> M2Matrix {
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for (r, row) in rows.iter_mut().enumerate() {
            row[r] = BigInt::one();
        }
        M2Matrix { rows }
    }

    pub fn det(&self) -> BigInt {
        let m = &self.rows;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn mul(&self, other: &M2Matrix) -> M2Matrix {
        let mut rows: [[BigInt; 3]; 3] = Default::default();
        for r in 0..3 {
            for c in 0..3 {
                let mut s = BigInt::zero();
                for t in 0..3 {
                    s += &self.rows[r][t] * &other.rows[t][c];
                }
                rows[r][c] = s;
            }
        }
        M2Matrix { rows }
    }
}

fn mod2_det(m: &[[bool; 3]; 3]) -> bool {
    (m[0][0] & ((m[1][1] & m[2][2]) ^ (m[1][2] & m[2][1])))
        ^ (m[0][1] & ((m[1][0] & m[2][2]) ^ (m[1][2] & m[2][0])))
        ^ (m[0][2] & ((m[1][0] & m[2][1]) ^ (m[1][1] & m[2][0])))
}

/// A permutation of the 8 cosets of M², indexed as in [`CosetClass::ALL`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassPerm(pub [usize; 8]);

impl ClassPerm {
    pub fn identity() -> ClassPerm {
        ClassPerm([0, 1, 2, 3, 4, 5, 6, 7])
    }

    pub fn is_identity(&self) -> bool {
        *self == ClassPerm::identity()
    }

    pub fn image(&self, c: CosetClass) -> CosetClass {
        CosetClass::ALL[self.0[c.index()]]
    }

    pub fn fixes(&self, c: CosetClass) -> bool {
        self.image(c) == c
    }

    /// True when the permutation exchanges exactly two of the classes
    /// {xy, yz, zx} and fixes the third.
    pub fn transposes_mixed_classes(&self) -> bool {
        let mixed = [CosetClass::Xy, CosetClass::Yz, CosetClass::Zx];
        let fixed = mixed.iter().filter(|c| self.fixes(**c)).count();
        let closed = mixed.iter().all(|c| mixed.contains(&self.image(*c)));
        closed && fixed == 1
    }
}

impl fmt::Display for ClassPerm {
    /// Cycle notation over the class labels; "id" for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 8];
        let mut wrote = false;
        for start in 0..8 {
            if seen[start] || self.0[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", CosetClass::ALL[i])?;
                i = self.0[i];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

/// Orbit partition of the 8 cosets under the group generated by the images
/// of the given endomorphisms (automorphisms expected). Orbits are returned
/// sorted by their least class.
pub fn orbits(gens: &[MEndo]) -> Vec<Vec<CosetClass>> {
    let perms: Vec<ClassPerm> = gens.iter().map(|e| e.lambda_perm()).collect();
    let mut remaining: BTreeSet<usize> = (0..8).collect();
    let mut out = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let mut orbit = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if !orbit.insert(i) {
                continue;
            }
            for p in &perms {
                stack.push(p.0[i]);
            }
        }
        for i in &orbit {
            remaining.remove(i);
        }
        out.push(orbit.into_iter().map(|i| CosetClass::ALL[i]).collect());
    }
    out
}

/// The standard generating set of Aut(M): the inner generators, the kernel
/// family representatives and θ.
pub fn aut_m_generators() -> Vec<MEndo> {
    vec![
        MEndo::theta(),
        MEndo::p_family(1, 0, 0),
        MEndo::p_family(0, 1, 0),
        MEndo::p_family(0, 0, 1),
        MEndo::inner(&MElem::gen_x()),
        MEndo::inner(&MElem::gen_y()),
        MEndo::inner(&MElem::gen_z()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::rand_melem;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn theta_is_an_automorphism() {
        let t = MEndo::theta();
        assert!(t.relation_check().is_ok());
        assert!(t.is_automorphism());
        assert_eq!(t.pow(3), MEndo::identity());
        assert_eq!(t.apply(&MElem::gen_x()), MElem::gen_y());
        // θ(xyz) = normal form of y z x
        assert_eq!(t.apply(&MElem::new(1, 1, 1)), MElem::new(-1, 1, -1));
    }

    #[test]
    fn p_family_members_pass() {
        assert!(MEndo::p_family(1, 0, 0).relation_check().is_ok());
        assert!(MEndo::p_family(-3, 7, 2).relation_check().is_ok());
        assert!(MEndo::p_family(1, 0, 0).is_automorphism());
    }

    #[test]
    fn squaring_map_fails_relations() {
        let e = MEndo::new(MElem::new(2, 0, 0), MElem::gen_y(), MElem::gen_z());
        assert_eq!(e.relation_check(), Err(RelationId::ZConjX));
        assert!(MEndo::checked(MElem::new(2, 0, 0), MElem::gen_y(), MElem::gen_z()).is_err());
    }

    #[test]
    fn inner_homomorphism_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = rand_melem(&mut rng, 6);
            let b = rand_melem(&mut rng, 6);
            let lhs = MEndo::inner(&a).compose(&MEndo::inner(&b));
            assert_eq!(lhs, MEndo::inner(&a.mul(&b)));
        }
    }

    #[test]
    fn m2_matrix_examples() {
        assert_eq!(MEndo::p_family(1, 0, 0).m2_matrix(), M2Matrix::identity());
        let m = MEndo::inner(&MElem::gen_x()).m2_matrix();
        let d: Vec<i64> = vec![1, 1, -1];
        for r in 0..3 {
            for c in 0..3 {
                let want = if r == c {
                    BigInt::from(d[r])
                } else {
                    BigInt::from(0)
                };
                assert_eq!(m.rows[r][c], want);
            }
        }
        // θ permutes the generators, hence a cyclic permutation matrix mod 2
        let p = MEndo::theta().mod2_matrix();
        assert_eq!(
            p,
            [
                [false, true, false],
                [false, false, true],
                [true, false, false]
            ]
        );
    }

    #[test]
    fn m2_matrix_functorial() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let gens = aut_m_generators();
        for _ in 0..100 {
            let a = &gens[rng.gen_range(0..gens.len())];
            let b = &gens[rng.gen_range(0..gens.len())];
            let lhs = a.compose(b).m2_matrix();
            assert_eq!(lhs, a.m2_matrix().mul(&b.m2_matrix()));
        }
    }

    #[test]
    fn is_inner_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let m = rand_melem(&mut rng, 8);
            let got = MEndo::inner(&m)
                .is_inner()
                .expect("inner map not recognized");
            assert_eq!(got, m);
        }
    }

    #[test]
    fn non_inner_examples() {
        assert_eq!(MEndo::p_family(1, 0, 0).is_inner(), None);
        assert_eq!(MEndo::theta().is_inner(), None);
        // squares of the kernel representatives are inner
        let sq = MEndo::p_family(1, 0, 0).pow(2);
        assert_eq!(sq.is_inner(), Some(MElem::new(0, 0, 2)));
    }

    #[test]
    fn lambda_perm_examples() {
        assert!(MEndo::inner(&MElem::gen_x()).lambda_perm().is_identity());
        let t = MEndo::theta().lambda_perm();
        assert_eq!(t.image(CosetClass::X), CosetClass::Y);
        assert_eq!(t.image(CosetClass::Xy), CosetClass::Yz);
        assert!(t.fixes(CosetClass::One));
        assert!(t.fixes(CosetClass::Xyz));
    }

    #[test]
    fn orbit_partition() {
        let parts = orbits(&aut_m_generators());
        let expect: Vec<Vec<CosetClass>> = vec![
            vec![CosetClass::One],
            vec![CosetClass::X, CosetClass::Y, CosetClass::Z],
            vec![CosetClass::Xy, CosetClass::Yz, CosetClass::Zx],
            vec![CosetClass::Xyz],
        ];
        assert_eq!(parts, expect);
    }

    #[test]
    fn p_family_composition_is_addition() {
        let a = MEndo::p_family(1, 2, -1);
        let b = MEndo::p_family(0, -3, 4);
        assert_eq!(a.compose(&b), MEndo::p_family(1, -1, 3));
    }
}
