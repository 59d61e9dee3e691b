//! Free words over the generator alphabets, parsing and printing, and the
//! rule-driven collector that serves as the ground-truth normalizer.
//!
//! The collector is deliberately naive: it repeatedly applies oriented
//! rewrite rules (letter swaps derived from the conjugation identities of
//! each presentation, and exponent folds such as A² → Z², D³ → 1, E² → ABC)
//! until the word is in normal form. The fast closed-form products in
//! [`crate::mgroup`], [`crate::ggroup`] and [`crate::pgroup`] are validated
//! against it, never the other way around.
//!
//! Word grammar: tokens separated by whitespace, each token `g` or `g^n`
//! with `g` a single case-sensitive generator letter and `n` a signed
//! integer. The lone token `1` denotes the empty word, matching how normal
//! forms are printed.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Which presented group a word lives in. V has no rewrite table of its own;
/// its words are evaluated through M-coordinates in [`crate::vgroup`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupId {
    M,
    V,
    G,
    P,
}

impl GroupId {
    pub fn alphabet(self) -> &'static [char] {
        match self {
            GroupId::M => &['x', 'y', 'z'],
            GroupId::V => &['u', 'v', 'w'],
            GroupId::G => &['X', 'Y', 'Z', 'A', 'B', 'C', 'D'],
            GroupId::P => &['X', 'Y', 'Z', 'A', 'B', 'C', 'D', 'E'],
        }
    }
}

impl std::str::FromStr for GroupId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "M" | "m" => Ok(GroupId::M),
            "V" | "v" => Ok(GroupId::V),
            "G" | "g" => Ok(GroupId::G),
            "P" | "p" => Ok(GroupId::P),
            other => Err(format!(
                "unknown group {other:?}, expected one of M, V, G, P"
            )),
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::M => write!(f, "M"),
            GroupId::V => write!(f, "V"),
            GroupId::G => write!(f, "G"),
            GroupId::P => write!(f, "P"),
        }
    }
}

/// A single generator symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gen(pub char);

impl Gen {
    /// Collation rank inside a word's alphabet: x<y<z, u<v<w, X<Y<Z<A<B<C<D<E.
    pub fn rank(self) -> u8 {
        match self.0 {
            'x' | 'u' | 'X' => 0,
            'y' | 'v' | 'Y' => 1,
            'z' | 'w' | 'Z' => 2,
            'A' => 3,
            'B' => 4,
            'C' => 5,
            'D' => 6,
            'E' => 7,
            c => unreachable!("invalid generator {c}"),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One block g^e of a freely merged word; `exp` is never zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    pub gen: Gen,
    pub exp: i64,
}

/// A freely merged word: adjacent letters carry distinct generators and no
/// exponent is zero. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends g^e, merging with the last letter and dropping cancellations.
    pub fn push(&mut self, gen: Gen, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.gen == gen {
                let e = last.exp.checked_add(exp).expect("word exponent overflow");
                if e == 0 {
                    self.0.pop();
                } else {
                    last.exp = e;
                }
                return;
            }
        }
        self.0.push(Letter { gen, exp });
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (char, i64)>) -> Word {
        let mut w = Word::empty();
        for (c, e) in letters {
            w.push(Gen(c), e);
        }
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for l in other.letters() {
            w.push(l.gen, l.exp);
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, l) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            if l.exp == 1 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^{}", l.gen, l.exp)?;
            }
        }
        Ok(())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator {name:?} for group {group} at byte {pos}")]
    UnknownGenerator {
        name: char,
        group: GroupId,
        pos: usize,
    },
}

/// Parses a word over the group's alphabet; the result is freely reduced.
pub fn parse_word(text: &str, group: GroupId) -> Result<Word, ParseError> {
    let mut w = Word::empty();
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let tok = &text[start..pos];
        if tok == "1" {
            continue; // identity token, as printed for empty normal forms
        }
        let mut chars = tok.chars();
        let c = chars.next().unwrap();
        if !c.is_ascii_alphabetic() {
            return Err(ParseError::Syntax {
                pos: start,
                msg: format!("expected a generator letter, found {c:?}"),
            });
        }
        if !group.alphabet().contains(&c) {
            return Err(ParseError::UnknownGenerator {
                name: c,
                group,
                pos: start,
            });
        }
        let rest = chars.as_str();
        let exp = if rest.is_empty() {
            1
        } else {
            let Some(digits) = rest.strip_prefix('^') else {
                return Err(ParseError::Syntax {
                    pos: start + c.len_utf8(),
                    msg: format!("expected ^<int> after generator, found {rest:?}"),
                });
            };
            digits.parse::<i64>().map_err(|e| ParseError::Syntax {
                pos: start + c.len_utf8() + 1,
                msg: format!("bad exponent {digits:?}: {e}"),
            })?
        };
        w.push(Gen(c), exp);
    }
    Ok(w)
}

/// Exponent of an output letter of a swap rule, as a function of the matched
/// exponents a (left letter) and b (right letter). `par` is b mod 2 ∈ {0,1}.
#[derive(Clone, Copy, Debug)]
pub enum ExpFun {
    /// a
    Hi,
    /// b
    Lo,
    /// b·(-1)^a
    LoFlipHi,
    /// a·(-1)^b
    HiFlipLo,
    /// -2a·par(b)
    MinusTwoHiParLo,
    /// -a·par(b)
    MinusHiParLo,
}

impl ExpFun {
    fn eval(self, a: i64, b: i64) -> i64 {
        let par = b.rem_euclid(2);
        match self {
            ExpFun::Hi => a,
            ExpFun::Lo => b,
            ExpFun::LoFlipHi => {
                if a % 2 != 0 {
                    -b
                } else {
                    b
                }
            }
            ExpFun::HiFlipLo => {
                if b % 2 != 0 {
                    -a
                } else {
                    a
                }
            }
            ExpFun::MinusTwoHiParLo => a.checked_mul(-2 * par).expect("exponent overflow"),
            ExpFun::MinusHiParLo => -a * par,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum SwapKind {
    /// Fixed list of output letters with exponent functions.
    Template(&'static [(char, ExpFun)]),
    /// D^a g^b → σ^{-a}(g)^b D^a where σ is the cycle X→Y→Z→X, A→B→C→A
    /// induced by conjugation with D.
    DCycle,
}

/// Oriented rewrite rule for an adjacent pair hi^a lo^b with hi ranked after lo.
#[derive(Clone, Copy, Debug)]
pub struct SwapRule {
    pub hi: char,
    pub lo: char,
    pub kind: SwapKind,
}

/// σ^{-1}: the letter image of g under conjugation by D (push D to the right).
fn d_backshift(c: char) -> char {
    match c {
        'X' => 'Z',
        'Y' => 'X',
        'Z' => 'Y',
        'A' => 'C',
        'B' => 'A',
        'C' => 'B',
        other => unreachable!("D does not shift {other}"),
    }
}

impl SwapRule {
    fn output(&self, a: i64, b: i64) -> Vec<(char, i64)> {
        match self.kind {
            SwapKind::Template(parts) => parts.iter().map(|(c, f)| (*c, f.eval(a, b))).collect(),
            SwapKind::DCycle => {
                let mut g = self.lo;
                for _ in 0..a.rem_euclid(3) {
                    g = d_backshift(g);
                }
                vec![(g, b), ('D', a)]
            }
        }
    }

    /// Concrete left- and right-hand words at the given exponents, used by
    /// the semantic soundness tests.
    pub fn instantiate(&self, a: i64, b: i64) -> (Word, Word) {
        let lhs = Word::from_letters([(self.hi, a), (self.lo, b)]);
        let rhs = Word::from_letters(self.output(a, b));
        (lhs, rhs)
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Carry {
    None,
    /// g^{2q} for the folded squares A² = Z², B² = X², C² = Y².
    Square(char),
    /// (ABC)^q for E² = ABC.
    AbcOfE,
}

/// Normalizes a single letter's exponent into [0, modulus), emitting the
/// carried part in front.
#[derive(Clone, Copy, Debug)]
pub struct FoldRule {
    pub gen: char,
    pub modulus: i64,
    pub carry: Carry,
}

impl FoldRule {
    fn applies(&self, exp: i64) -> bool {
        exp < 0 || exp >= self.modulus
    }

    fn output(&self, exp: i64) -> Vec<(char, i64)> {
        let r = exp.rem_euclid(self.modulus);
        let q = (exp - r) / self.modulus;
        let mut out = match self.carry {
            Carry::None => vec![],
            Carry::Square(c) => vec![(c, 2 * q)],
            Carry::AbcOfE => vec![('A', q), ('B', q), ('C', q)],
        };
        out.push((self.gen, r));
        out
    }

    pub fn instantiate(&self, exp: i64) -> (Word, Word) {
        let lhs = Word::from_letters([(self.gen, exp)]);
        let rhs = Word::from_letters(self.output(exp));
        (lhs, rhs)
    }
}

/// The oriented rewrite rules of one presentation.
pub struct RuleTable {
    pub group: GroupId,
    pub swaps: &'static [SwapRule],
    pub folds: &'static [FoldRule],
}

use ExpFun::*;

#[rustfmt::skip]
const M_SWAPS: &[SwapRule] = &[
    // y^a x^b = x^{b(-1)^a} y^a, from (x^b)^(y^a) = x^{b(-1)^a}
    SwapRule { hi: 'y', lo: 'x', kind: SwapKind::Template(&[('x', LoFlipHi), ('y', Hi)]) },
    // z^a x^b = x^b z^{a(-1)^b}, from (z^a)^(x^b) = z^{a(-1)^b}
    SwapRule { hi: 'z', lo: 'x', kind: SwapKind::Template(&[('x', Lo), ('z', HiFlipLo)]) },
    // z^a y^b = y^{b(-1)^a} z^a, from (y^b)^(z^a) = y^{b(-1)^a}
    SwapRule { hi: 'z', lo: 'y', kind: SwapKind::Template(&[('y', LoFlipHi), ('z', Hi)]) },
];

#[rustfmt::skip]
const G_SWAPS: &[SwapRule] = &[
    // the inner copy <X,Y,Z> multiplies exactly like M
    SwapRule { hi: 'Y', lo: 'X', kind: SwapKind::Template(&[('X', LoFlipHi), ('Y', Hi)]) },
    SwapRule { hi: 'Z', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('Z', HiFlipLo)]) },
    SwapRule { hi: 'Z', lo: 'Y', kind: SwapKind::Template(&[('Y', LoFlipHi), ('Z', Hi)]) },
    // A^a X^b = X^b Z^{-2a·par(b)} A^a, from X^A = XZ²
    SwapRule { hi: 'A', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('Z', MinusTwoHiParLo), ('A', Hi)]) },
    SwapRule { hi: 'A', lo: 'Y', kind: SwapKind::Template(&[('Y', Lo), ('A', Hi)]) },
    SwapRule { hi: 'A', lo: 'Z', kind: SwapKind::Template(&[('Z', Lo), ('A', Hi)]) },
    SwapRule { hi: 'B', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('B', Hi)]) },
    // B^a Y^b = Y^b X^{-2a·par(b)} B^a, from Y^B = YX²
    SwapRule { hi: 'B', lo: 'Y', kind: SwapKind::Template(&[('Y', Lo), ('X', MinusTwoHiParLo), ('B', Hi)]) },
    SwapRule { hi: 'B', lo: 'Z', kind: SwapKind::Template(&[('Z', Lo), ('B', Hi)]) },
    SwapRule { hi: 'C', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('C', Hi)]) },
    SwapRule { hi: 'C', lo: 'Y', kind: SwapKind::Template(&[('Y', Lo), ('C', Hi)]) },
    // C^a Z^b = Z^b Y^{-2a·par(b)} C^a, from Z^C = ZY²
    SwapRule { hi: 'C', lo: 'Z', kind: SwapKind::Template(&[('Z', Lo), ('Y', MinusTwoHiParLo), ('C', Hi)]) },
    // <A,B,C> is abelian
    SwapRule { hi: 'B', lo: 'A', kind: SwapKind::Template(&[('A', Lo), ('B', Hi)]) },
    SwapRule { hi: 'C', lo: 'A', kind: SwapKind::Template(&[('A', Lo), ('C', Hi)]) },
    SwapRule { hi: 'C', lo: 'B', kind: SwapKind::Template(&[('B', Lo), ('C', Hi)]) },
    // D relabels through the two 3-cycles
    SwapRule { hi: 'D', lo: 'X', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'Y', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'Z', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'A', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'B', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'C', kind: SwapKind::DCycle },
];

#[rustfmt::skip]
const P_SWAPS: &[SwapRule] = &[
    SwapRule { hi: 'Y', lo: 'X', kind: SwapKind::Template(&[('X', LoFlipHi), ('Y', Hi)]) },
    SwapRule { hi: 'Z', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('Z', HiFlipLo)]) },
    SwapRule { hi: 'Z', lo: 'Y', kind: SwapKind::Template(&[('Y', LoFlipHi), ('Z', Hi)]) },
    SwapRule { hi: 'A', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('Z', MinusTwoHiParLo), ('A', Hi)]) },
    SwapRule { hi: 'A', lo: 'Y', kind: SwapKind::Template(&[('Y', Lo), ('A', Hi)]) },
    SwapRule { hi: 'A', lo: 'Z', kind: SwapKind::Template(&[('Z', Lo), ('A', Hi)]) },
    SwapRule { hi: 'B', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('B', Hi)]) },
    SwapRule { hi: 'B', lo: 'Y', kind: SwapKind::Template(&[('Y', Lo), ('X', MinusTwoHiParLo), ('B', Hi)]) },
    SwapRule { hi: 'B', lo: 'Z', kind: SwapKind::Template(&[('Z', Lo), ('B', Hi)]) },
    SwapRule { hi: 'C', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('C', Hi)]) },
    SwapRule { hi: 'C', lo: 'Y', kind: SwapKind::Template(&[('Y', Lo), ('C', Hi)]) },
    SwapRule { hi: 'C', lo: 'Z', kind: SwapKind::Template(&[('Z', Lo), ('Y', MinusTwoHiParLo), ('C', Hi)]) },
    SwapRule { hi: 'B', lo: 'A', kind: SwapKind::Template(&[('A', Lo), ('B', Hi)]) },
    SwapRule { hi: 'C', lo: 'A', kind: SwapKind::Template(&[('A', Lo), ('C', Hi)]) },
    SwapRule { hi: 'C', lo: 'B', kind: SwapKind::Template(&[('B', Lo), ('C', Hi)]) },
    SwapRule { hi: 'D', lo: 'X', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'Y', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'Z', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'A', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'B', kind: SwapKind::DCycle },
    SwapRule { hi: 'D', lo: 'C', kind: SwapKind::DCycle },
    // E^a X^b = X^b A^{-a·par(b)} E^a, from X^E = XA
    SwapRule { hi: 'E', lo: 'X', kind: SwapKind::Template(&[('X', Lo), ('A', MinusHiParLo), ('E', Hi)]) },
    SwapRule { hi: 'E', lo: 'Y', kind: SwapKind::Template(&[('Y', Lo), ('B', MinusHiParLo), ('E', Hi)]) },
    SwapRule { hi: 'E', lo: 'Z', kind: SwapKind::Template(&[('Z', Lo), ('C', MinusHiParLo), ('E', Hi)]) },
    SwapRule { hi: 'E', lo: 'A', kind: SwapKind::Template(&[('A', Lo), ('E', Hi)]) },
    SwapRule { hi: 'E', lo: 'B', kind: SwapKind::Template(&[('B', Lo), ('E', Hi)]) },
    SwapRule { hi: 'E', lo: 'C', kind: SwapKind::Template(&[('C', Lo), ('E', Hi)]) },
    SwapRule { hi: 'E', lo: 'D', kind: SwapKind::Template(&[('D', Lo), ('E', Hi)]) },
];

#[rustfmt::skip]
const G_FOLDS: &[FoldRule] = &[
    FoldRule { gen: 'A', modulus: 2, carry: Carry::Square('Z') },
    FoldRule { gen: 'B', modulus: 2, carry: Carry::Square('X') },
    FoldRule { gen: 'C', modulus: 2, carry: Carry::Square('Y') },
    FoldRule { gen: 'D', modulus: 3, carry: Carry::None },
];

#[rustfmt::skip]
const P_FOLDS: &[FoldRule] = &[
    FoldRule { gen: 'A', modulus: 2, carry: Carry::Square('Z') },
    FoldRule { gen: 'B', modulus: 2, carry: Carry::Square('X') },
    FoldRule { gen: 'C', modulus: 2, carry: Carry::Square('Y') },
    FoldRule { gen: 'D', modulus: 3, carry: Carry::None },
    FoldRule { gen: 'E', modulus: 2, carry: Carry::AbcOfE },
];

#[rustfmt::skip]
static M_TABLE: RuleTable = RuleTable { group: GroupId::M, swaps: M_SWAPS, folds: &[] };
#[rustfmt::skip]
static G_TABLE: RuleTable = RuleTable { group: GroupId::G, swaps: G_SWAPS, folds: G_FOLDS };
#[rustfmt::skip]
static P_TABLE: RuleTable = RuleTable { group: GroupId::P, swaps: P_SWAPS, folds: P_FOLDS };

impl RuleTable {
    pub fn for_group(group: GroupId) -> Option<&'static RuleTable> {
        match group {
            GroupId::M => Some(&M_TABLE),
            GroupId::G => Some(&G_TABLE),
            GroupId::P => Some(&P_TABLE),
            GroupId::V => None,
        }
    }

    fn find_swap(&self, hi: char, lo: char) -> Option<&SwapRule> {
        self.swaps.iter().find(|r| r.hi == hi && r.lo == lo)
    }

    fn find_fold(&self, gen: char, exp: i64) -> Option<&FoldRule> {
        self.folds.iter().find(|r| r.gen == gen && r.applies(exp))
    }
}

/// How the collector chooses the next rewrite site; the normal form must not
/// depend on the choice, which is what the confluence suite checks.
#[derive(Clone, Copy, Debug)]
pub enum Strategy {
    Leftmost,
    Random(u64),
}

const FUEL: u64 = 20_000_000;

/// Splices `repl` over `letters[at .. at+deleted]`, re-merging around the
/// edit. Returns nothing; cancellations may cascade outward.
fn splice(letters: &mut Vec<Letter>, at: usize, deleted: usize, repl: Vec<(char, i64)>) {
    let tail: Vec<Letter> = letters.split_off(at + deleted);
    letters.truncate(at);
    for (c, e) in repl {
        push_merged(letters, Gen(c), e);
    }
    for l in tail {
        push_merged(letters, l.gen, l.exp);
    }
}

fn push_merged(letters: &mut Vec<Letter>, gen: Gen, exp: i64) {
    if exp == 0 {
        return;
    }
    if let Some(last) = letters.last_mut() {
        if last.gen == gen {
            let e = last.exp.checked_add(exp).expect("word exponent overflow");
            if e == 0 {
                letters.pop();
            } else {
                last.exp = e;
            }
            return;
        }
    }
    letters.push(Letter { gen, exp });
}

#[derive(Clone, Copy, Debug)]
enum Site {
    Fold(usize),
    Swap(usize),
}

fn site_at(table: &RuleTable, letters: &[Letter], i: usize) -> Option<Site> {
    let l = letters[i];
    if table.find_fold(l.gen.0, l.exp).is_some() {
        return Some(Site::Fold(i));
    }
    if i + 1 < letters.len() {
        let r = letters[i + 1];
        if l.gen.rank() > r.gen.rank() && table.find_swap(l.gen.0, r.gen.0).is_some() {
            return Some(Site::Swap(i));
        }
    }
    None
}

fn apply_site(table: &RuleTable, letters: &mut Vec<Letter>, site: Site) {
    match site {
        Site::Fold(i) => {
            let l = letters[i];
            let rule = table.find_fold(l.gen.0, l.exp).unwrap();
            splice(letters, i, 1, rule.output(l.exp));
        }
        Site::Swap(i) => {
            let (a, b) = (letters[i], letters[i + 1]);
            let rule = table.find_swap(a.gen.0, b.gen.0).unwrap();
            splice(letters, i, 2, rule.output(a.exp, b.exp));
        }
    }
}

/// Collects `w` to its unique normal form using the group's rule table.
///
/// Uses the leftmost strategy; see [`collect_with`] for the randomized one.
/// Panics if the rewriting exceeds its fuel, which signals an unsound rule
/// table rather than a property of any input.
pub fn collect(w: &Word, group: GroupId) -> Word {
    collect_with(w, group, Strategy::Leftmost)
}

pub fn collect_with(w: &Word, group: GroupId, strategy: Strategy) -> Word {
    let table =
        RuleTable::for_group(group).unwrap_or_else(|| panic!("group {group} has no rewrite table"));
    let mut letters = w.0.clone();
    let mut fuel = FUEL;
    match strategy {
        Strategy::Leftmost => loop {
            let mut i = 0usize;
            let mut touched = false;
            while i < letters.len() {
                if let Some(site) = site_at(table, &letters, i) {
                    fuel -= 1;
                    if fuel == 0 {
                        panic!("collector ran out of fuel on {w} in {group}");
                    }
                    apply_site(table, &mut letters, site);
                    touched = true;
                    i = i.saturating_sub(2);
                } else {
                    i += 1;
                }
            }
            // the backtracking scan is a heuristic; rescan until clean
            if !touched {
                break;
            }
        },
        Strategy::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            loop {
                let sites: Vec<Site> = (0..letters.len())
                    .filter_map(|i| site_at(table, &letters, i))
                    .collect();
                if sites.is_empty() {
                    break;
                }
                fuel -= 1;
                if fuel == 0 {
                    panic!("collector ran out of fuel on {w} in {group}");
                }
                let site = sites[rng.gen_range(0..sites.len())];
                apply_site(table, &mut letters, site);
            }
        }
    }
    Word(letters)
}

/// Deterministic pseudorandom word: at most `max_len` letters over the
/// group's alphabet with exponents in [-max_exp, max_exp] \ {0}.
pub fn random_word(seed: u64, group: GroupId, max_len: usize, max_exp: i64) -> Word {
    assert!(max_len >= 1 && max_exp >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word_with(&mut rng, group, max_len, max_exp)
}

/// Same as [`random_word`] but drawing from a caller-owned stream.
pub fn random_word_with(
    rng: &mut ChaCha8Rng,
    group: GroupId,
    max_len: usize,
    max_exp: i64,
) -> Word {
    let alphabet = group.alphabet();
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::empty();
    for _ in 0..len {
        // avoid merging with the previous letter so the promised letter and
        // exponent bounds hold for the result
        let gen = loop {
            let g = Gen(alphabet[rng.gen_range(0..alphabet.len())]);
            if w.letters().last().map(|l| l.gen) != Some(g) {
                break g;
            }
        };
        let mut exp = rng.gen_range(-max_exp..max_exp);
        if exp >= 0 {
            exp += 1;
        }
        w.push(gen, exp);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let w = parse_word("x y^-2 z", GroupId::M).unwrap();
        assert_eq!(
            w.letters()
                .iter()
                .map(|l| (l.gen.0, l.exp))
                .collect::<Vec<_>>(),
            vec![('x', 1), ('y', -2), ('z', 1)]
        );
        assert!(parse_word("", GroupId::M).unwrap().is_empty());
        assert!(parse_word("x x^-1", GroupId::M).unwrap().is_empty());
        assert!(parse_word("1", GroupId::M).unwrap().is_empty());
        assert!(parse_word("x^0", GroupId::M).unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_word("x q", GroupId::M),
            Err(ParseError::UnknownGenerator {
                name: 'q',
                pos: 2,
                ..
            })
        ));
        assert!(matches!(
            parse_word("X", GroupId::M),
            Err(ParseError::UnknownGenerator { name: 'X', .. })
        ));
        assert!(matches!(
            parse_word("x^", GroupId::M),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_word("^2", GroupId::M),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_word("x2", GroupId::M),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn collect_m_example() {
        let w = parse_word("x y z x", GroupId::M).unwrap();
        assert_eq!(collect(&w, GroupId::M).to_string(), "y z^-1");
    }

    #[test]
    fn collect_g_relations() {
        let w = parse_word("Y^-1 X Y", GroupId::G).unwrap();
        assert_eq!(collect(&w, GroupId::G).to_string(), "X^-1");
        let w = parse_word("A A", GroupId::G).unwrap();
        assert_eq!(collect(&w, GroupId::G).to_string(), "Z^2");
        let w = parse_word("D D D", GroupId::G).unwrap();
        assert_eq!(collect(&w, GroupId::G).to_string(), "1");
    }

    #[test]
    fn collect_p_relations() {
        // X^E = XA, i.e. E^-1 X E collects to X A
        let w = parse_word("E^-1 X E", GroupId::P).unwrap();
        assert_eq!(collect(&w, GroupId::P).to_string(), "X A");
        let w = parse_word("E E", GroupId::P).unwrap();
        assert_eq!(collect(&w, GroupId::P).to_string(), "A B C");
        let w = parse_word("X^-1 E^-1 X E", GroupId::P).unwrap();
        assert_eq!(collect(&w, GroupId::P).to_string(), "A");
    }

    #[test]
    fn random_word_is_deterministic() {
        let a = random_word(0, GroupId::M, 4, 2);
        let b = random_word(0, GroupId::M, 4, 2);
        assert_eq!(a, b);
        assert!(a.letters().len() <= 4);
        for l in random_word(1, GroupId::G, 8, 3).letters() {
            assert!(GroupId::G.alphabet().contains(&l.gen.0));
            assert!(l.exp != 0 && l.exp.abs() <= 3);
        }
    }

    #[test]
    fn strategies_agree_on_samples() {
        for group in [GroupId::M, GroupId::G, GroupId::P] {
            for seed in 0..300u64 {
                let w = random_word(seed, group, 10, 3);
                let a = collect(&w, group);
                let b = collect_with(&w, group, super::Strategy::Random(seed ^ 0xdead));
                assert_eq!(a, b, "strategies disagree on {w} in {group}");
            }
        }
    }

    #[test]
    fn collected_words_are_normal() {
        for group in [GroupId::M, GroupId::G, GroupId::P] {
            for seed in 0..200u64 {
                let w = random_word(seed.wrapping_mul(7), group, 12, 4);
                let n = collect(&w, group);
                let ranks: Vec<u8> = n.letters().iter().map(|l| l.gen.rank()).collect();
                assert!(ranks.windows(2).all(|p| p[0] < p[1]), "not sorted: {n}");
                for l in n.letters() {
                    match l.gen.0 {
                        'A' | 'B' | 'C' | 'E' => assert!(l.exp == 1, "bit out of range in {n}"),
                        'D' => assert!((1..=2).contains(&l.exp), "D out of range in {n}"),
                        _ => {}
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(seed in 0u64..5000) {
            for group in [GroupId::M, GroupId::V, GroupId::G, GroupId::P] {
                let w = random_word(seed, group, 12, 6);
                let back = parse_word(&w.to_string(), group).unwrap();
                prop_assert_eq!(&back, &w);
            }
        }
    }
}
