//! P = Aut(G) = Aut(Aut(M)), generated over G by the outer automorphism E
//! with X^E = XA, Y^E = YB, Z^E = ZC and A, B, C, D fixed; E² is conjugation
//! by ABC, so every element has the normal form g·E^m with m ∈ {0, 1}.

use std::fmt;
use std::sync::OnceLock;

use crate::ggroup::GElem;
use crate::word::Word;

/// Element of P in normal form g·E^m.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PElem {
    pub g: GElem,
    pub e: bool,
}

/// ABC as an element of G.
pub fn abc() -> GElem {
    GElem::from_parts(0, 0, 0, true, true, true, 0)
}

/// The image of g under the automorphism E, computed homomorphically from
/// the generator assignment.
pub fn e_action(g: &GElem) -> GElem {
    static IMAGES: OnceLock<[GElem; 7]> = OnceLock::new();
    let images = IMAGES.get_or_init(|| {
        [
            GElem::gen_x().gmul(&GElem::gen_a()),
            GElem::gen_y().gmul(&GElem::gen_b()),
            GElem::gen_z().gmul(&GElem::gen_c()),
            GElem::gen_a(),
            GElem::gen_b(),
            GElem::gen_c(),
            GElem::gen_d(),
        ]
    });
    apply_images(images, g)
}

/// The image of g under E⁻¹: X ↦ XA⁻¹, Y ↦ YB⁻¹, Z ↦ ZC⁻¹.
pub fn e_action_inv(g: &GElem) -> GElem {
    static IMAGES: OnceLock<[GElem; 7]> = OnceLock::new();
    let images = IMAGES.get_or_init(|| {
        [
            GElem::gen_x().gmul(&GElem::gen_a().ginv()),
            GElem::gen_y().gmul(&GElem::gen_b().ginv()),
            GElem::gen_z().gmul(&GElem::gen_c().ginv()),
            GElem::gen_a(),
            GElem::gen_b(),
            GElem::gen_c(),
            GElem::gen_d(),
        ]
    });
    apply_images(images, g)
}

/// Evaluates the endomorphism of G with the given generator images on a
/// normal form, left to right.
pub fn apply_images(images: &[GElem; 7], g: &GElem) -> GElem {
    let mut acc = images[0].gpow(&g.m.i);
    acc = acc.gmul(&images[1].gpow(&g.m.j));
    acc = acc.gmul(&images[2].gpow(&g.m.k));
    for (n, bit) in g.t.iter().enumerate() {
        if *bit {
            acc = acc.gmul(&images[3 + n]);
        }
    }
    for _ in 0..g.l {
        acc = acc.gmul(&images[6]);
    }
    acc
}

impl PElem {
    pub fn identity() -> PElem {
        PElem {
            g: GElem::identity(),
            e: false,
        }
    }

    pub fn from_g(g: GElem) -> PElem {
        PElem { g, e: false }
    }

    pub fn gen_e() -> PElem {
        PElem {
            g: GElem::identity(),
            e: true,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.g.is_identity() && !self.e
    }

    /// Normal-form product: E^{m₁} g₂ = (g₂ under E^{-m₁}) E^{m₁} and the
    /// leftover E² folds to ABC.
    pub fn pmul(&self, other: &PElem) -> PElem {
        let moved = if self.e {
            e_action_inv(&other.g)
        } else {
            other.g.clone()
        };
        let g = self.g.gmul(&moved);
        if self.e && other.e {
            PElem {
                g: g.gmul(&abc()),
                e: false,
            }
        } else {
            PElem {
                g,
                e: self.e ^ other.e,
            }
        }
    }

    pub fn pinv(&self) -> PElem {
        if !self.e {
            return PElem {
                g: self.g.ginv(),
                e: false,
            };
        }
        // (gE)⁻¹ = E⁻¹g⁻¹ = (g⁻¹ under E)·E⁻¹ and E⁻¹ = (ABC)⁻¹E
        PElem {
            g: e_action(&self.g.ginv()).gmul(&abc().ginv()),
            e: true,
        }
    }

    pub fn conj(&self, other: &PElem) -> PElem {
        other.pinv().pmul(self).pmul(other)
    }

    pub fn comm(&self, other: &PElem) -> PElem {
        self.pinv().pmul(&other.pinv()).pmul(self).pmul(other)
    }

    /// The automorphism of G this element denotes: h ↦ E^{-m} g⁻¹ h g E^m.
    pub fn act_on_g(&self, h: &GElem) -> GElem {
        let conj = h.conj(&self.g);
        if self.e {
            e_action(&conj)
        } else {
            conj
        }
    }

    pub fn to_word(&self) -> Word {
        let mut w = self.g.to_word();
        if self.e {
            w.push(crate::word::Gen('E'), 1);
        }
        w
    }
}

impl fmt::Display for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.g.is_identity(), self.e) {
            (true, false) => write!(f, "1"),
            (true, true) => write!(f, "E"),
            (false, false) => write!(f, "{}", self.g),
            (false, true) => write!(f, "{} E", self.g),
        }
    }
}

/// Evaluates a P-word with the normal-form product.
pub fn eval_word(w: &Word) -> PElem {
    let mut acc = PElem::identity();
    for l in w.letters() {
        let step = match l.gen.0 {
            'E' => PElem::gen_e(),
            _ => {
                let mut sub = Word::empty();
                sub.push(l.gen, 1);
                PElem::from_g(crate::ggroup::eval_word(&sub))
            }
        };
        let step = ppow(&step, l.exp);
        acc = acc.pmul(&step);
    }
    acc
}

fn ppow(p: &PElem, n: i64) -> PElem {
    let mut base = if n >= 0 { p.clone() } else { p.pinv() };
    let mut n = n.unsigned_abs();
    let mut acc = PElem::identity();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.pmul(&base);
        }
        base = base.pmul(&base);
        n >>= 1;
    }
    acc
}

/// The defining relations of P over those of G, as words.
pub const E_RELATIONS: &[(&str, &str, &str)] = &[
    ("A^E = A", "E^-1 A E", "A"),
    ("B^E = B", "E^-1 B E", "B"),
    ("C^E = C", "E^-1 C E", "C"),
    ("D^E = D", "E^-1 D E", "D"),
    ("X^E = XA", "E^-1 X E", "X A"),
    ("Y^E = YB", "E^-1 Y E", "Y B"),
    ("Z^E = ZC", "E^-1 Z E", "Z C"),
    ("E^2 = ABC", "E E", "A B C"),
];

/// The sublattice of M² generated by those commutators of the given
/// P-elements that land in M², closed under conjugation. Used to certify
/// M² ⊆ [H,H] for subgroups H of P whose image in P/M² is known.
pub fn commutator_m2_lattice(gens: &[PElem]) -> crate::zlattice::Lattice3 {
    let mut lat = crate::zlattice::Lattice3::empty();
    let mut m2_elems: Vec<GElem> = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let c = gens[i].comm(&gens[j]);
            if !c.e && c.g.t == [false; 3] && c.g.l == 0 && c.g.m.in_m2() {
                lat.add_row(c.g.m.m2_coords());
                m2_elems.push(c.g);
            }
        }
    }
    // close under conjugation by the generators; E fixes M² pointwise, so
    // only the G-parts act
    for _ in 0..16 {
        let mut changed = false;
        for g in gens {
            for r in lat.rows().to_vec() {
                let e = PElem::from_g(GElem {
                    m: crate::mgroup::MElem::from_m2_coords(&r),
                    t: [false; 3],
                    l: 0,
                });
                let c = e.conj(g);
                assert!(!c.e && c.g.t == [false; 3] && c.g.l == 0);
                if !lat.contains(&c.g.m.m2_coords()) {
                    lat.add_row(c.g.m.m2_coords());
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    lat
}

/// Searches for h₀ ∈ G with bounded normal form such that conjugation by Ψ
/// on Aut(M) equals "apply E, then conjugate by h₀"; the match is checked on
/// all seven generators. Returns every candidate in the box.
pub fn omega_witness_candidates(bound: i64) -> Vec<GElem> {
    omega_witness_candidates_for(bound, OmegaShape::EThenConj)
}

/// The four bracketings a correspondence witness could use. None of them
/// admits a witness: conjugation and the E-action both fix the order-3
/// quotient G/U, while conjugation by Ψ inverts it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OmegaShape {
    /// τ(g) = (g under E)^{h₀}
    EThenConj,
    /// τ(g) = (g^{h₀}) under E
    ConjThenE,
    /// τ(g) = (g under E⁻¹)^{h₀}
    EInvThenConj,
    /// τ⁻¹(g) = (g under E)^{h₀}
    TauInv,
}

pub fn omega_witness_candidates_for(bound: i64, shape: OmegaShape) -> Vec<GElem> {
    let tables = crate::vgroup::psi_tables();
    let gens = GElem::generators();
    let targets: Vec<GElem> = gens
        .iter()
        .map(|g| match shape {
            OmegaShape::TauInv => tables.tau_inv_apply(g),
            _ => tables.tau_apply(g),
        })
        .collect();
    let mut found = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for bits in 0..8u8 {
                    for l in 0..3u8 {
                        let h = GElem::from_parts(
                            a,
                            b,
                            c,
                            bits & 1 != 0,
                            bits & 2 != 0,
                            bits & 4 != 0,
                            l,
                        );
                        let matches = gens.iter().zip(&targets).all(|(g, t)| {
                            let image = match shape {
                                OmegaShape::EThenConj | OmegaShape::TauInv => e_action(g).conj(&h),
                                OmegaShape::ConjThenE => e_action(&g.conj(&h)),
                                OmegaShape::EInvThenConj => e_action_inv(g).conj(&h),
                            };
                            &image == t
                        });
                        if matches {
                            found.push(h.clone());
                        }
                    }
                }
            }
        }
    }
    found
}
