//! The characteristic subgroup V = ⟨xy, yz, zx⟩ of M, its presentation on
//! u = xy, v = yz, w = zx, the outer automorphism Ψ, and Aut(V) modelled as
//! pairs over G = Aut(M).
//!
//! V consists of the elements with even exponent sum; all V computation
//! routes through M-coordinates. Aut(V) is the disjoint union of the
//! restrictions of Aut(M) and their composites with Ψ, so an element of
//! Aut(V) is a pair (g, ε) acting as "restrict g to V, then apply Ψ^ε".

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ggroup::{recognize, GElem};
use crate::mendo::MEndo;
use crate::mgroup::MElem;
use crate::word::Word;

/// Element of V: an element of M with even exponent sum.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VElem(MElem);

impl VElem {
    pub fn new(p: MElem) -> Option<VElem> {
        if p.in_v() {
            Some(VElem(p))
        } else {
            None
        }
    }

    pub fn identity() -> VElem {
        VElem(MElem::identity())
    }

    /// u = xy.
    pub fn gen_u() -> VElem {
        VElem(MElem::new(1, 1, 0))
    }

    /// v = yz.
    pub fn gen_v() -> VElem {
        VElem(MElem::new(0, 1, 1))
    }

    /// w = zx, whose normal form is x z⁻¹.
    pub fn gen_w() -> VElem {
        VElem(MElem::new(1, 0, -1))
    }

    pub fn as_melem(&self) -> &MElem {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn mul(&self, q: &VElem) -> VElem {
        VElem(self.0.mul(&q.0))
    }

    pub fn inv(&self) -> VElem {
        VElem(self.0.inv())
    }

    pub fn pow(&self, n: &BigInt) -> VElem {
        VElem(self.0.pow(n))
    }

    pub fn pow_i64(&self, n: i64) -> VElem {
        VElem(self.0.pow_i64(n))
    }

    pub fn comm(&self, q: &VElem) -> VElem {
        VElem(self.0.comm(&q.0))
    }

    /// The class of the element in V/V² ≅ C₂×C₂ (V² = M²).
    pub fn v_class(&self) -> VClass {
        let p = self.as_melem();
        match (p.i.is_odd(), p.j.is_odd(), p.k.is_odd()) {
            (false, false, false) => VClass::One,
            (true, true, false) => VClass::U,
            (false, true, true) => VClass::V,
            (true, false, true) => VClass::W,
            _ => unreachable!("odd exponent sum in a V element"),
        }
    }
}

impl fmt::Display for VElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The four cosets of V² in V.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VClass {
    One,
    U,
    V,
    W,
}

impl VClass {
    pub const ALL: [VClass; 4] = [VClass::One, VClass::U, VClass::V, VClass::W];

    pub fn index(self) -> usize {
        VClass::ALL.iter().position(|c| *c == self).unwrap()
    }

    pub fn rep(self) -> VElem {
        match self {
            VClass::One => VElem::identity(),
            VClass::U => VElem::gen_u(),
            VClass::V => VElem::gen_v(),
            VClass::W => VElem::gen_w(),
        }
    }
}

impl fmt::Display for VClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VClass::One => "1",
            VClass::U => "u",
            VClass::V => "v",
            VClass::W => "w",
        };
        write!(f, "{s}")
    }
}

/// Permutation of the four V/V² classes, always fixing the identity class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VPerm(pub [usize; 4]);

impl VPerm {
    pub fn identity() -> VPerm {
        VPerm([0, 1, 2, 3])
    }

    pub fn is_identity(&self) -> bool {
        *self == VPerm::identity()
    }

    pub fn image(&self, c: VClass) -> VClass {
        VClass::ALL[self.0[c.index()]]
    }

    pub fn compose(&self, next: &VPerm) -> VPerm {
        let mut out = [0usize; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = next.0[self.0[i]];
        }
        VPerm(out)
    }

    /// Parity of the restriction to {u, v, w}: false = even, true = odd.
    pub fn is_odd(&self) -> bool {
        let mut inversions = 0;
        for a in 1..4 {
            for b in (a + 1)..4 {
                if self.0[a] > self.0[b] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 1
    }

    /// Exponent t with self = (u v w)^t, when the permutation is that cycle.
    pub fn cycle_power(&self) -> Option<u8> {
        let cyc = VPerm([0, 2, 3, 1]); // u ↦ v ↦ w ↦ u
        let mut p = VPerm::identity();
        for t in 0..3u8 {
            if *self == p {
                return Some(t);
            }
            p = p.compose(&cyc);
        }
        None
    }
}

impl fmt::Display for VPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 4];
        let mut wrote = false;
        for start in 0..4 {
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
                write!(f, "{}", VClass::ALL[i])?;
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

/// Endomorphism of V by the images of u, v, w. The image of w is stored
/// redundantly (V = ⟨u, v⟩, but no closed expression of w in u, v is used);
/// the relation check keeps the triple consistent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VEndo {
    pub img_u: VElem,
    pub img_v: VElem,
    pub img_w: VElem,
}

/// The defining relations of V as pairs of words over u, v, w.
pub const V_RELATIONS: &[(&str, &str, &str)] = &[
    ("[u,v] = w^2 u^-2 v^2", "u^-1 v^-1 u v", "w^2 u^-2 v^2"),
    ("[v,w] = u^2 v^-2 w^2", "v^-1 w^-1 v w", "u^2 v^-2 w^2"),
    ("[w,u] = v^2 w^-2 u^2", "w^-1 u^-1 w u", "v^2 w^-2 u^2"),
    ("uvw = w^2 u^2 v^-2", "u v w", "w^2 u^2 v^-2"),
    ("vwu = u^2 v^2 w^-2", "v w u", "u^2 v^2 w^-2"),
    ("wuv = v^2 w^2 u^-2", "w u v", "v^2 w^2 u^-2"),
    ("(u^2)^v = u^-2", "v^-1 u^2 v", "u^-2"),
    ("(u^2)^w = u^-2", "w^-1 u^2 w", "u^-2"),
    ("(v^2)^w = v^-2", "w^-1 v^2 w", "v^-2"),
    ("(v^2)^u = v^-2", "u^-1 v^2 u", "v^-2"),
    ("(w^2)^u = w^-2", "u^-1 w^2 u", "w^-2"),
    ("(w^2)^v = w^-2", "v^-1 w^2 v", "w^-2"),
];

/// Consequences of the defining relations.
pub const V_CONSEQUENCES: &[(&str, &str, &str)] = &[
    ("[u^2,v^2] = 1", "u^-2 v^-2 u^2 v^2", "1"),
    ("[v^2,w^2] = 1", "v^-2 w^-2 v^2 w^2", "1"),
    ("[w^2,u^2] = 1", "w^-2 u^-2 w^2 u^2", "1"),
];

/// Evaluates a u/v/w word in M-coordinates.
pub fn eval_v_word(w: &Word) -> VElem {
    let mut acc = VElem::identity();
    for l in w.letters() {
        let gen = match l.gen.0 {
            'u' => VElem::gen_u(),
            'v' => VElem::gen_v(),
            'w' => VElem::gen_w(),
            c => panic!("not a V generator: {c}"),
        };
        acc = acc.mul(&gen.pow_i64(l.exp));
    }
    acc
}

/// Evaluates a u/v/w word under the images of an endomorphism.
fn eval_v_word_under(w: &Word, e: &VEndo) -> VElem {
    let mut acc = VElem::identity();
    for l in w.letters() {
        let gen = match l.gen.0 {
            'u' => &e.img_u,
            'v' => &e.img_v,
            'w' => &e.img_w,
            c => panic!("not a V generator: {c}"),
        };
        acc = acc.mul(&gen.pow_i64(l.exp));
    }
    acc
}

impl VEndo {
    pub fn new(img_u: VElem, img_v: VElem, img_w: VElem) -> VEndo {
        VEndo {
            img_u,
            img_v,
            img_w,
        }
    }

    pub fn identity() -> VEndo {
        VEndo::new(VElem::gen_u(), VElem::gen_v(), VElem::gen_w())
    }

    /// Ψ: u ↦ uw², v ↦ wv², w ↦ vu².
    pub fn psi() -> VEndo {
        let u = VElem::gen_u();
        let v = VElem::gen_v();
        let w = VElem::gen_w();
        VEndo::new(
            u.mul(&w.pow_i64(2)),
            w.mul(&v.pow_i64(2)),
            v.mul(&u.pow_i64(2)),
        )
    }

    /// Ψ⁻¹: u ↦ uv⁻², v ↦ wu⁻², w ↦ vw⁻².
    pub fn psi_inv() -> VEndo {
        let u = VElem::gen_u();
        let v = VElem::gen_v();
        let w = VElem::gen_w();
        VEndo::new(
            u.mul(&v.pow_i64(-2)),
            w.mul(&u.pow_i64(-2)),
            v.mul(&w.pow_i64(-2)),
        )
    }

    /// Checks all twelve defining relations on the images; returns the first
    /// violated relation's name.
    pub fn relation_check(&self) -> Result<(), &'static str> {
        for (name, lhs, rhs) in V_RELATIONS {
            let wl = crate::word::parse_word(lhs, crate::word::GroupId::V).unwrap();
            let wr = crate::word::parse_word(rhs, crate::word::GroupId::V).unwrap();
            if eval_v_word_under(&wl, self) != eval_v_word_under(&wr, self) {
                return Err(name);
            }
        }
        Ok(())
    }

    /// Applies the endomorphism to an arbitrary element of V. The element is
    /// split as (class representative)·(element of V² = M²) and the M² part
    /// is rewritten through x² = w², y² = u², z² = v².
    pub fn apply(&self, p: &VElem) -> VElem {
        let lead = p.v_class().rep();
        let rest = lead.inv().mul(p);
        let [a, b, c] = rest.as_melem().m2_coords();
        let lead_img = match p.v_class() {
            VClass::One => VElem::identity(),
            VClass::U => self.img_u.clone(),
            VClass::V => self.img_v.clone(),
            VClass::W => self.img_w.clone(),
        };
        lead_img
            .mul(&self.img_w.pow(&(&a * BigInt::from(2))))
            .mul(&self.img_u.pow(&(&b * BigInt::from(2))))
            .mul(&self.img_v.pow(&(&c * BigInt::from(2))))
    }

    /// Left-to-right composition: apply `self`, then `next`.
    pub fn compose(&self, next: &VEndo) -> VEndo {
        VEndo::new(
            next.apply(&self.img_u),
            next.apply(&self.img_v),
            next.apply(&self.img_w),
        )
    }

    /// The induced permutation of the four V/V² classes.
    pub fn pi_perm(&self) -> VPerm {
        let mut map = [0usize; 4];
        for (n, class) in VClass::ALL.iter().enumerate() {
            map[n] = self.apply(&class.rep()).v_class().index();
        }
        VPerm(map)
    }
}

impl fmt::Display for VEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u -> {}, v -> {}, w -> {}",
            self.img_u, self.img_v, self.img_w
        )
    }
}

/// Restriction of the automorphism g of M to V.
pub fn restrict(g: &GElem) -> VEndo {
    let e = g.semantic();
    let img = |p: &VElem| VElem::new(e.apply(p.as_melem())).expect("automorphism image left V");
    VEndo::new(
        img(&VElem::gen_u()),
        img(&VElem::gen_v()),
        img(&VElem::gen_w()),
    )
}

/// Finds the unique g ∈ G whose restriction to V is `e`, or `None` when `e`
/// induces an odd permutation of V/V² (no automorphism of M does).
///
/// After removing the D-power read off the class action, the remainder fixes
/// every class, so it extends an automorphism of M of kernel shape
/// x ↦ x^{±1}z^{2c}; the images of y and z then follow from e(u) and e(v),
/// and the stored image of w cross-checks the solution.
pub fn extend_to_m(e: &VEndo) -> Option<GElem> {
    let perm = e.pi_perm();
    if perm.is_odd() {
        return None;
    }
    let t = perm.cycle_power()?;
    let d_back = GElem::gen_d().gpow_i64(i64::from((3 - t) % 3));
    let e1 = e.compose(&restrict(&d_back));
    let eu = e1.img_u.as_melem();
    let ev = e1.img_v.as_melem();
    if eu.k.is_odd() {
        return None;
    }
    for sign in [1i64, -1] {
        let phi_x = MElem {
            i: BigInt::from(sign),
            j: BigInt::from(0),
            k: eu.k.clone(),
        };
        let phi_y = phi_x.inv().mul(eu);
        if !phi_y.k.is_zero() || phi_y.j.abs() != BigInt::one() || phi_y.i.is_odd() {
            continue;
        }
        let phi_z = phi_y.inv().mul(ev);
        if !phi_z.i.is_zero() || phi_z.k.abs() != BigInt::one() || phi_z.j.is_odd() {
            continue;
        }
        let phi = MEndo::new(phi_x, phi_y, phi_z);
        if phi.relation_check().is_err() || !phi.is_automorphism() {
            continue;
        }
        if phi.apply(VElem::gen_w().as_melem()) != *e1.img_w.as_melem() {
            continue;
        }
        let Ok(g0) = recognize(&phi) else { continue };
        let g = g0.gmul(&GElem::gen_d().gpow_i64(i64::from(t)));
        if restrict(&g) == *e {
            return Some(g);
        }
    }
    None
}

/// Element of Aut(V): restriction of g ∈ Aut(M) to V followed by Ψ^ε.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VAutElem {
    pub g: GElem,
    pub psi: bool,
}

impl VAutElem {
    pub fn identity() -> VAutElem {
        VAutElem {
            g: GElem::identity(),
            psi: false,
        }
    }

    pub fn from_g(g: GElem) -> VAutElem {
        VAutElem { g, psi: false }
    }

    pub fn psi_elem() -> VAutElem {
        VAutElem {
            g: GElem::identity(),
            psi: true,
        }
    }

    /// Action on an element of V.
    pub fn act(&self, p: &VElem) -> VElem {
        let t = restrict(&self.g).apply(p);
        if self.psi {
            VEndo::psi().apply(&t)
        } else {
            t
        }
    }

    /// The endomorphism of V this pair denotes.
    pub fn as_vendo(&self) -> VEndo {
        let r = restrict(&self.g);
        if self.psi {
            r.compose(&VEndo::psi())
        } else {
            r
        }
    }

    pub fn pi_perm(&self) -> VPerm {
        self.as_vendo().pi_perm()
    }

    /// Pair product. Moving a restriction across Ψ conjugates it:
    /// Ψ·Γ(g) = Γ(τ⁻¹(g))·Ψ, and Ψ² folds to the restriction of c₀.
    pub fn mul(&self, other: &VAutElem) -> VAutElem {
        if !self.psi {
            return VAutElem {
                g: self.g.gmul(&other.g),
                psi: other.psi,
            };
        }
        let tables = psi_tables();
        let moved = tables.tau_inv_apply(&other.g);
        let g = self.g.gmul(&moved);
        if other.psi {
            VAutElem {
                g: g.gmul(&tables.c0),
                psi: false,
            }
        } else {
            VAutElem { g, psi: true }
        }
    }

    pub fn inv(&self) -> VAutElem {
        if !self.psi {
            return VAutElem {
                g: self.g.ginv(),
                psi: false,
            };
        }
        // (Γ(g)Ψ)⁻¹ = Ψ⁻¹Γ(g)⁻¹ = Γ(τ(g⁻¹))·Γ(c₀⁻¹)·Ψ
        let tables = psi_tables();
        let h = tables.tau_apply(&self.g.ginv());
        VAutElem {
            g: h.gmul(&tables.c0.ginv()),
            psi: true,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.g.is_identity() && !self.psi
    }
}

impl fmt::Display for VAutElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.psi {
            if self.g.is_identity() {
                write!(f, "Psi")
            } else {
                write!(f, "{} Psi", self.g)
            }
        } else {
            write!(f, "{}", self.g)
        }
    }
}

/// Conjugation of Aut(M) by Ψ, tabulated on the generators of G and extended
/// multiplicatively, together with the cocycle c₀ = extend(Ψ²).
pub struct PsiTables {
    /// τ(gen) with τ(g) = Γ⁻¹(Ψ⁻¹·Γ(g)·Ψ), indexed like [`GElem::generators`].
    pub tau: [GElem; 7],
    /// τ⁻¹(gen), conjugation the other way.
    pub tau_inv: [GElem; 7],
    /// The unique c₀ with Γ(c₀) = Ψ².
    pub c0: GElem,
}

impl PsiTables {
    fn apply_table(table: &[GElem; 7], g: &GElem) -> GElem {
        let mut acc = table[0].gpow(&g.m.i);
        acc = acc.gmul(&table[1].gpow(&g.m.j));
        acc = acc.gmul(&table[2].gpow(&g.m.k));
        for (n, bit) in g.t.iter().enumerate() {
            if *bit {
                acc = acc.gmul(&table[3 + n]);
            }
        }
        for _ in 0..g.l {
            acc = acc.gmul(&table[6]);
        }
        acc
    }

    pub fn tau_apply(&self, g: &GElem) -> GElem {
        Self::apply_table(&self.tau, g)
    }

    pub fn tau_inv_apply(&self, g: &GElem) -> GElem {
        Self::apply_table(&self.tau_inv, g)
    }
}

/// τ(g) computed directly through V, with no table: Γ⁻¹(Ψ⁻¹·Γ(g)·Ψ).
pub fn tau_direct(g: &GElem) -> Option<GElem> {
    extend_to_m(
        &VEndo::psi_inv()
            .compose(&restrict(g))
            .compose(&VEndo::psi()),
    )
}

/// τ⁻¹(g) computed directly: Γ⁻¹(Ψ·Γ(g)·Ψ⁻¹).
pub fn tau_inv_direct(g: &GElem) -> Option<GElem> {
    extend_to_m(
        &VEndo::psi()
            .compose(&restrict(g))
            .compose(&VEndo::psi_inv()),
    )
}

static PSI_TABLES: OnceLock<PsiTables> = OnceLock::new();

pub fn psi_tables() -> &'static PsiTables {
    PSI_TABLES.get_or_init(|| {
        let gens = GElem::generators();
        let tau = gens
            .clone()
            .map(|g| tau_direct(&g).expect("conjugation by Psi left Aut(M)"));
        let tau_inv = gens.map(|g| tau_inv_direct(&g).expect("conjugation by Psi^-1 left Aut(M)"));
        let psi2 = VEndo::psi().compose(&VEndo::psi());
        let c0 = extend_to_m(&psi2).expect("Psi^2 is not a restriction");
        PsiTables { tau, tau_inv, c0 }
    })
}
