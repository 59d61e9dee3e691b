//! Finite quotients of G and P, GF(2) subspace enumeration, and the
//! exhaustive structural scans over the 6-dimensional space S = U/M².
//!
//! Everything the subgroup lattice of G and P distinguishes above M² lives
//! in quotients of order at most 384, which are materialized as full
//! multiplication tables driven by the exact products. What the quotients
//! cannot see (commutators inside M²) is certified separately with the
//! exact commutator lattices of [`crate::ggroup::commutator_lattice`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::ggroup::GElem;
use crate::pgroup::PElem;

/// The materialized finite quotients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum QuotientId {
    /// G/[G,G]² = G/M², order 192.
    GModM2,
    /// G/[G,G], order 12.
    GModDerived,
    /// P/M², order 384.
    PModM2,
    /// P/[P,P], order 12.
    PModDerived,
}

impl fmt::Display for QuotientId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuotientId::GModM2 => "G mod [G,G]^2",
            QuotientId::GModDerived => "G mod [G,G]",
            QuotientId::PModM2 => "P mod M^2",
            QuotientId::PModDerived => "P mod [P,P]",
        };
        write!(f, "{s}")
    }
}

/// Packed code of a quotient element:
/// bits 0..3 = parities of the X, Y, Z exponents, bits 3..6 = A, B, C,
/// bits 6..8 = D exponent, bit 8 = E. Coarser quotients use sub-encodings.
pub type Code = u16;

fn reduce_p(p: &PElem, id: QuotientId) -> Code {
    let a = p.g.m.i.is_odd() as u16;
    let b = p.g.m.j.is_odd() as u16;
    let c = p.g.m.k.is_odd() as u16;
    let (i, j, k) = (p.g.t[0] as u16, p.g.t[1] as u16, p.g.t[2] as u16);
    let l = u16::from(p.g.l);
    let e = p.e as u16;
    match id {
        QuotientId::GModM2 => {
            debug_assert!(!p.e);
            a | b << 1 | c << 2 | i << 3 | j << 4 | k << 5 | l << 6
        }
        QuotientId::PModM2 => a | b << 1 | c << 2 | i << 3 | j << 4 | k << 5 | l << 6 | e << 8,
        QuotientId::GModDerived => {
            debug_assert!(!p.e);
            ((a + b + c) & 1) | ((i + j + k) & 1) << 1 | l << 2
        }
        QuotientId::PModDerived => ((a + b + c) & 1) | e << 1 | l << 2,
    }
}

fn lift(code: Code, id: QuotientId) -> PElem {
    let g = |a: u16, b: u16, c: u16, i: u16, j: u16, k: u16, l: u16| {
        GElem::from_parts(
            a as i64,
            b as i64,
            c as i64,
            i != 0,
            j != 0,
            k != 0,
            l as u8,
        )
    };
    match id {
        QuotientId::GModM2 | QuotientId::PModM2 => PElem {
            g: g(
                code & 1,
                code >> 1 & 1,
                code >> 2 & 1,
                code >> 3 & 1,
                code >> 4 & 1,
                code >> 5 & 1,
                code >> 6 & 3,
            ),
            e: code >> 8 & 1 != 0,
        },
        QuotientId::GModDerived => PElem {
            g: g(code & 1, 0, 0, code >> 1 & 1, 0, 0, code >> 2 & 3),
            e: false,
        },
        QuotientId::PModDerived => PElem {
            g: g(code & 1, 0, 0, 0, 0, 0, code >> 2 & 3),
            e: code >> 1 & 1 != 0,
        },
    }
}

/// A finite quotient group as a complete multiplication table.
pub struct FiniteGroupTable {
    pub id: QuotientId,
    pub codes: Vec<Code>,
    index: HashMap<Code, u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl FiniteGroupTable {
    fn build(id: QuotientId) -> FiniteGroupTable {
        let mut codes: Vec<Code> = Vec::new();
        match id {
            QuotientId::GModM2 => {
                for l in 0..3u16 {
                    for bits in 0..64u16 {
                        codes.push(bits | l << 6);
                    }
                }
            }
            QuotientId::PModM2 => {
                for e in 0..2u16 {
                    for l in 0..3u16 {
                        for bits in 0..64u16 {
                            codes.push(bits | l << 6 | e << 8);
                        }
                    }
                }
            }
            QuotientId::GModDerived => {
                for l in 0..3u16 {
                    for bits in 0..4u16 {
                        codes.push(bits | l << 2);
                    }
                }
            }
            QuotientId::PModDerived => {
                for l in 0..3u16 {
                    for bits in 0..4u16 {
                        codes.push(bits | l << 2);
                    }
                }
            }
        }
        let index: HashMap<Code, u16> = codes
            .iter()
            .enumerate()
            .map(|(n, c)| (*c, n as u16))
            .collect();
        let n = codes.len();
        let mut mul = vec![0u16; n * n];
        for (r, &cr) in codes.iter().enumerate() {
            let pr = lift(cr, id);
            for (s, &cs) in codes.iter().enumerate() {
                let prod = reduce_p(&pr.pmul(&lift(cs, id)), id);
                mul[r * n + s] = index[&prod];
            }
        }
        let mut inv = vec![0u16; n];
        let e = index[&reduce_p(&PElem::identity(), id)];
        for r in 0..n {
            inv[r] = (0..n)
                .find(|&s| mul[r * n + s] == e as usize as u16)
                .expect("no inverse in table") as u16;
        }
        FiniteGroupTable {
            id,
            codes,
            index,
            mul,
            inv,
        }
    }

    pub fn order(&self) -> usize {
        self.codes.len()
    }

    pub fn identity(&self) -> u16 {
        self.index[&reduce_p(&PElem::identity(), self.id)]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.codes.len() + b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn reduce(&self, p: &PElem) -> u16 {
        self.index[&reduce_p(p, self.id)]
    }

    pub fn reduce_g(&self, g: &GElem) -> u16 {
        self.reduce(&PElem::from_g(g.clone()))
    }

    pub fn lift(&self, a: u16) -> PElem {
        lift(self.codes[a as usize], self.id)
    }

    pub fn conj(&self, a: u16, by: u16) -> u16 {
        self.mul(self.mul(self.inv(by), a), by)
    }

    pub fn comm(&self, a: u16, b: u16) -> u16 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: u16) -> usize {
        let e = self.identity();
        let mut x = a;
        let mut n = 1;
        while x != e {
            x = self.mul(x, a);
            n += 1;
            assert!(n <= self.order());
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order() as u16;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> usize {
        (0..self.order() as u16)
            .map(|a| self.element_order(a))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Multiset of element orders, as (order, count) pairs; a cheap abelian
    /// isomorphism-type fingerprint.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut m: std::collections::BTreeMap<usize, usize> = Default::default();
        for a in 0..self.order() as u16 {
            *m.entry(self.element_order(a)).or_default() += 1;
        }
        m.into_iter().collect()
    }

    /// Subgroup generated by the given elements, as a sorted set.
    pub fn closure(&self, gens: &[u16]) -> BTreeSet<u16> {
        let mut set: BTreeSet<u16> = [self.identity()].into();
        let mut stack: Vec<u16> = vec![self.identity()];
        while let Some(x) = stack.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if set.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        set
    }

    /// The commutator subgroup of the subgroup given as a set.
    pub fn derived_of(&self, sub: &BTreeSet<u16>) -> BTreeSet<u16> {
        let elems: Vec<u16> = sub.iter().copied().collect();
        let mut comms = Vec::new();
        for &a in &elems {
            for &b in &elems {
                comms.push(self.comm(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.closure(&comms)
    }

    pub fn derived(&self) -> BTreeSet<u16> {
        let all: BTreeSet<u16> = (0..self.order() as u16).collect();
        self.derived_of(&all)
    }

    pub fn is_normal(&self, sub: &BTreeSet<u16>) -> bool {
        sub.iter()
            .all(|&a| (0..self.order() as u16).all(|g| sub.contains(&self.conj(a, g))))
    }

    /// The quotient by a normal subgroup, as a small table on coset
    /// representatives (each coset named by its least element).
    pub fn quotient(&self, normal: &BTreeSet<u16>) -> CosetTable<'_> {
        assert!(self.is_normal(normal));
        let n = self.order();
        let mut rep = vec![u16::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n as u16 {
            if rep[a as usize] != u16::MAX {
                continue;
            }
            let r = normal.iter().map(|&x| self.mul(x, a)).min().unwrap();
            for &x in normal {
                rep[self.mul(x, a) as usize] = r;
            }
            reps.push(r);
        }
        reps.sort_unstable();
        CosetTable {
            table: self,
            rep,
            reps,
        }
    }

    /// Index-2 subgroups, each returned as a set.
    pub fn index_two_subgroups(&self) -> Vec<BTreeSet<u16>> {
        // kernels of homomorphisms onto C2 = hyperplanes over the quotient
        // by squares and commutators
        let mut gens: Vec<u16> = Vec::new();
        for a in 0..self.order() as u16 {
            gens.push(self.mul(a, a));
            for b in 0..self.order() as u16 {
                gens.push(self.comm(a, b));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let n = self.closure(&gens);
        // cosets of n form an elementary abelian 2-group; enumerate its
        // hyperplanes by brute force over subsets generated by coset reps
        let mut reps: Vec<u16> = Vec::new();
        let mut seen: BTreeSet<u16> = BTreeSet::new();
        for a in 0..self.order() as u16 {
            if !seen.contains(&a) {
                reps.push(a);
                for &x in &n {
                    seen.insert(self.mul(x, a));
                }
            }
        }
        let mut out = Vec::new();
        let mut keys = BTreeSet::new();
        for &a in &reps {
            for &b in &reps {
                let mut g: Vec<u16> = n.iter().copied().collect();
                g.push(a);
                g.push(b);
                let h = self.closure(&g);
                if h.len() * 2 == self.order() && keys.insert(h.iter().copied().collect::<Vec<_>>())
                {
                    out.push(h);
                }
            }
        }
        out
    }
}

/// Quotient of a [`FiniteGroupTable`] by a normal subgroup.
pub struct CosetTable<'a> {
    table: &'a FiniteGroupTable,
    rep: Vec<u16>,
    pub reps: Vec<u16>,
}

impl CosetTable<'_> {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn project(&self, a: u16) -> u16 {
        self.rep[a as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.project(self.table.mul(a, b))
    }

    pub fn identity(&self) -> u16 {
        self.project(self.table.identity())
    }

    pub fn element_order(&self, a: u16) -> usize {
        let e = self.identity();
        let mut x = self.project(a);
        let mut n = 1;
        while x != e {
            x = self.mul(x, a);
            n += 1;
            assert!(n <= self.order());
        }
        n
    }

    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut m: std::collections::BTreeMap<usize, usize> = Default::default();
        for &a in &self.reps {
            *m.entry(self.element_order(a)).or_default() += 1;
        }
        m.into_iter().collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.reps
            .iter()
            .all(|&a| self.reps.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Derived subgroup of the quotient, as a set of representatives.
    pub fn derived(&self) -> BTreeSet<u16> {
        let mut comms: Vec<u16> = Vec::new();
        for &a in &self.reps {
            for &b in &self.reps {
                let c = self.mul(
                    self.mul(self.table.inv(a), self.table.inv(b)),
                    self.mul(a, b),
                );
                comms.push(self.project(c));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        // closure inside the quotient
        let mut set: BTreeSet<u16> = [self.identity()].into();
        let mut stack: Vec<u16> = vec![self.identity()];
        while let Some(x) = stack.pop() {
            for &g in &comms {
                let y = self.mul(x, g);
                if set.insert(y) {
                    stack.push(y);
                }
            }
        }
        set
    }
}

static TABLES: OnceLock<[FiniteGroupTable; 4]> = OnceLock::new();

/// Materializes (once) and returns the quotient table.
pub fn materialize(id: QuotientId) -> &'static FiniteGroupTable {
    let tables = TABLES.get_or_init(|| {
        [
            FiniteGroupTable::build(QuotientId::GModM2),
            FiniteGroupTable::build(QuotientId::GModDerived),
            FiniteGroupTable::build(QuotientId::PModM2),
            FiniteGroupTable::build(QuotientId::PModDerived),
        ]
    });
    match id {
        QuotientId::GModM2 => &tables[0],
        QuotientId::GModDerived => &tables[1],
        QuotientId::PModM2 => &tables[2],
        QuotientId::PModDerived => &tables[3],
    }
}

/// A subspace of S = U/[G,G]² ≅ GF(2)⁶ in reduced row echelon form, rows as
/// 6-bit masks with coordinate order (X, Y, Z, A, B, C).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct F2Subspace {
    pub rows: Vec<u8>,
}

impl F2Subspace {
    pub fn from_vectors(vecs: &[u8]) -> F2Subspace {
        let mut rows: Vec<u8> = Vec::new();
        for &v in vecs {
            let mut v = v & 0x3f;
            for &r in &rows {
                let pivot = 1 << (7 - r.leading_zeros());
                if v & pivot != 0 {
                    v ^= r;
                }
            }
            if v != 0 {
                rows.push(v);
                rows.sort_unstable_by_key(|r| std::cmp::Reverse(*r));
                // clear entries above each pivot to reach RREF
                for i in (0..rows.len()).rev() {
                    let pivot = 1 << (7 - rows[i].leading_zeros());
                    for j in 0..i {
                        if rows[j] & pivot != 0 {
                            rows[j] ^= rows[i];
                        }
                    }
                }
            }
        }
        F2Subspace { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: u8) -> bool {
        let mut v = v & 0x3f;
        for &r in &self.rows {
            let pivot = 1 << (7 - r.leading_zeros());
            if v & pivot != 0 {
                v ^= r;
            }
        }
        v == 0
    }

    /// All nonzero vectors of the subspace.
    pub fn vectors(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for mask in 1u32..(1 << self.rows.len()) {
            let mut v = 0u8;
            for (n, r) in self.rows.iter().enumerate() {
                if mask >> n & 1 != 0 {
                    v ^= r;
                }
            }
            out.push(v);
        }
        out.sort_unstable();
        out
    }

    /// Canonical lift of a vector to the exact group.
    pub fn lift_vector(v: u8) -> GElem {
        GElem::from_parts(
            (v & 1) as i64,
            (v >> 1 & 1) as i64,
            (v >> 2 & 1) as i64,
            v >> 3 & 1 != 0,
            v >> 4 & 1 != 0,
            v >> 5 & 1 != 0,
            0,
        )
    }
}

impl fmt::Display for F2Subspace {
    /// Row-major bit string, three rows of six bits for the 3-dimensional
    /// subspaces handled here.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            for c in 0..6 {
                write!(f, "{}", r >> c & 1)?;
            }
        }
        Ok(())
    }
}

/// Enumerates every 3-dimensional subspace of GF(2)⁶ in canonical form;
/// there are exactly (2⁶-1)(2⁶-2)(2⁶-4) / ((2³-1)(2³-2)(2³-4)) = 1395.
pub fn enumerate_3subspaces() -> Vec<F2Subspace> {
    let mut out: BTreeSet<F2Subspace> = BTreeSet::new();
    for a in 1u8..64 {
        for b in (a + 1)..64 {
            if b == a {
                continue;
            }
            for c in (b + 1)..64 {
                if c == (a ^ b) {
                    continue;
                }
                let s = F2Subspace::from_vectors(&[a, b, c]);
                if s.dim() == 3 {
                    out.insert(s);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The conjugation action of g on S, computed exactly on a lifted vector.
pub fn conj_vector(v: u8, g: &GElem) -> u8 {
    let c = F2Subspace::lift_vector(v).conj(g);
    debug_assert!(c.l == 0);
    let mut out = 0u8;
    if c.m.i.is_odd() {
        out |= 1;
    }
    if c.m.j.is_odd() {
        out |= 2;
    }
    if c.m.k.is_odd() {
        out |= 4;
    }
    for (n, bit) in c.t.iter().enumerate() {
        if *bit {
            out |= 8 << n;
        }
    }
    out
}

/// Is the preimage of the subspace normal in G? Invariance under the
/// generating set {X, A, D} suffices.
pub fn subspace_normal(s: &F2Subspace) -> bool {
    let gens = [GElem::gen_x(), GElem::gen_a(), GElem::gen_d()];
    s.vectors()
        .iter()
        .all(|&v| gens.iter().all(|g| s.contains(conj_vector(v, g))))
}

/// Exact basis lifts of a 3-dimensional subspace.
pub fn basis_lifts(s: &F2Subspace) -> Vec<GElem> {
    s.rows.iter().map(|&r| F2Subspace::lift_vector(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{rand_gelem, rand_pelem};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn table_orders() {
        assert_eq!(materialize(QuotientId::GModM2).order(), 192);
        assert_eq!(materialize(QuotientId::PModM2).order(), 384);
        assert_eq!(materialize(QuotientId::GModDerived).order(), 12);
        assert_eq!(materialize(QuotientId::PModDerived).order(), 12);
    }

    #[test]
    fn quotient_maps_are_homomorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let tg = materialize(QuotientId::GModM2);
        let tp = materialize(QuotientId::PModM2);
        for _ in 0..300 {
            let a = rand_gelem(&mut rng, 6);
            let b = rand_gelem(&mut rng, 6);
            assert_eq!(
                tg.reduce_g(&a.gmul(&b)),
                tg.mul(tg.reduce_g(&a), tg.reduce_g(&b))
            );
            let p = rand_pelem(&mut rng, 6);
            let q = rand_pelem(&mut rng, 6);
            assert_eq!(tp.reduce(&p.pmul(&q)), tp.mul(tp.reduce(&p), tp.reduce(&q)));
        }
    }

    #[test]
    fn full_associativity_of_the_192_table() {
        let t = materialize(QuotientId::GModM2);
        let n = t.order() as u16;
        for a in 0..n {
            for b in 0..n {
                let ab = t.mul(a, b);
                for c in 0..n {
                    assert_eq!(t.mul(ab, c), t.mul(a, t.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn sampled_associativity_of_the_384_table() {
        let t = materialize(QuotientId::PModM2);
        let n = t.order() as u16;
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..1_000_000 {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let c = rng.gen_range(0..n);
            assert_eq!(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
        }
    }

    #[test]
    fn small_quotients_are_abelian_of_type_c2_c2_c3() {
        for id in [QuotientId::GModDerived, QuotientId::PModDerived] {
            let t = materialize(id);
            assert!(t.is_abelian(), "{id} not abelian");
            assert_eq!(t.order_census(), vec![(1, 1), (2, 3), (3, 2), (6, 6)]);
        }
    }

    #[test]
    fn subspace_count_and_canonicity() {
        let subs = enumerate_3subspaces();
        assert_eq!(subs.len(), 1395);
        let abc = F2Subspace::from_vectors(&[8, 16, 32]);
        assert!(subs.contains(&abc));
        let mut seen = std::collections::BTreeSet::new();
        for s in &subs {
            assert_eq!(s.dim(), 3);
            assert!(seen.insert(s.vectors()), "duplicate subspace {s}");
        }
    }

    #[test]
    fn subspace_display_roundtrip() {
        let s = F2Subspace::from_vectors(&[9, 18, 36]); // XA, YB, ZC
        assert_eq!(s.to_string().len(), 18);
        assert!(subspace_normal(&s));
    }
}
