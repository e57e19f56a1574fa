//! Finite Coxeter systems: enumeration, lengths, canonical reduced words,
//! Bruhat order and parabolic coset machinery.

mod matrix;
mod realize;

use std::fmt;
use std::sync::OnceLock;

pub use matrix::CoxeterMatrix;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub const DEFAULT_CAP: usize = 50_000;

/// An element of a [`CoxeterSystem`], as its index in the canonical
/// enumeration (length first, then lexicographically smallest reduced word).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A set of simple generators, as a bitmask over generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn full(rank: usize) -> Self {
        Self(if rank >= 64 {
            u64::MAX
        } else {
            (1u64 << rank) - 1
        })
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&s| self.contains(s))
    }

    /// Every subset of `S` for a system of the given rank, in bitmask order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = GenSet> {
        (0..1u64 << rank).map(GenSet)
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = GenSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.iter().map(|s| format!("s{}", s + 1)).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// A fully enumerated finite Coxeter system.
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    length: Vec<u32>,
    words: Vec<Vec<u8>>,
    right: Vec<Vec<Element>>,
    left: Vec<Vec<Element>>,
    inverse: Vec<Element>,
    longest: Element,
    // rows of the Bruhat order: bit x of row y is set iff x <= y
    bruhat: Vec<OnceLock<Vec<u64>>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("rank", &self.rank())
            .field("order", &self.order())
            .finish()
    }
}

impl CoxeterSystem {
    /// Enumerates the group of `matrix`, failing if it has more than `cap`
    /// elements.
    pub fn build(matrix: CoxeterMatrix, cap: usize) -> Result<Self> {
        let raw = realize::enumerate(&matrix, cap)?;
        let n = raw.length.len();
        let rank = matrix.rank();

        // lexicographically smallest reduced word: min over right descents s
        // of word(ws) + s, filled in BFS order (which is length order)
        let mut words: Vec<Option<Vec<u8>>> = vec![None; n];
        words[0] = Some(Vec::new());
        let mut by_length: Vec<usize> = (0..n).collect();
        by_length.sort_by_key(|&w| raw.length[w]);
        for &w in by_length.iter().skip(1) {
            let best = (0..rank)
                .filter_map(|s| {
                    let ws = raw.right[w][s] as usize;
                    (raw.length[ws] < raw.length[w]).then(|| {
                        let mut word = words[ws].clone().expect("shorter element already visited");
                        word.push(s as u8);
                        word
                    })
                })
                .min()
                .expect("non-identity element has a right descent");
            words[w] = Some(best);
        }
        let words: Vec<Vec<u8>> = words.into_iter().map(Option::unwrap).collect();

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            raw.length[a]
                .cmp(&raw.length[b])
                .then_with(|| words[a].cmp(&words[b]))
        });
        let mut position = vec![0u32; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new as u32;
        }

        let length: Vec<u32> = order.iter().map(|&old| raw.length[old]).collect();
        let words: Vec<Vec<u8>> = order.iter().map(|&old| words[old].clone()).collect();
        let right: Vec<Vec<Element>> = order
            .iter()
            .map(|&old| {
                raw.right[old]
                    .iter()
                    .map(|&x| Element(position[x as usize]))
                    .collect()
            })
            .collect();

        // s * (w' t) = (s w') t, and (w' t)^{-1} = t w'^{-1}
        let mut left: Vec<Vec<Element>> = vec![Vec::new(); n];
        let mut inverse = vec![Element::IDENTITY; n];
        left[0] = (0..rank).map(|s| right[0][s]).collect();
        for w in 1..n {
            let t = *words[w].last().unwrap() as usize;
            let prefix = right[w][t].index();
            left[w] = (0..rank)
                .map(|s| right[left[prefix][s].index()][t])
                .collect();
            inverse[w] = left[inverse[prefix].index()][t];
        }

        let longest = Element((n - 1) as u32);
        debug_assert!(length[..n - 1].iter().all(|&l| l < length[n - 1]));

        Ok(Self {
            matrix,
            length,
            words,
            right,
            left,
            inverse,
            longest,
            bruhat: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    /// Builds a named type (`"A3"`, `"I2(5)"`, `"A1xA1"`, ...) with the
    /// default cap.
    pub fn named(name: &str) -> Result<Self> {
        Self::build(CoxeterMatrix::from_name(name)?, DEFAULT_CAP)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator {
        (0..self.order() as u32).map(Element)
    }

    pub fn element(&self, index: usize) -> Element {
        assert!(index < self.order(), "element index out of range");
        Element(index as u32)
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn generator(&self, s: usize) -> Element {
        self.right[0][s]
    }

    pub fn longest(&self) -> Element {
        self.longest
    }

    pub fn length(&self, w: Element) -> u32 {
        self.length[w.index()]
    }

    /// The lexicographically smallest reduced word, as generator indices.
    pub fn reduced_word(&self, w: Element) -> &[u8] {
        &self.words[w.index()]
    }

    pub fn mult_gen(&self, w: Element, s: usize, side: Side) -> Element {
        match side {
            Side::Right => self.right[w.index()][s],
            Side::Left => self.left[w.index()][s],
        }
    }

    pub fn inverse(&self, w: Element) -> Element {
        self.inverse[w.index()]
    }

    /// Group product, by replaying the reduced word of `y` on the right of `x`.
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.reduced_word(y)
            .iter()
            .fold(x, |acc, &s| self.right[acc.index()][s as usize])
    }

    /// The element spelled by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Element {
        word.iter()
            .fold(Element::IDENTITY, |acc, &s| self.right[acc.index()][s])
    }

    pub fn is_descent(&self, w: Element, s: usize, side: Side) -> bool {
        self.length(self.mult_gen(w, s, side)) < self.length(w)
    }

    pub fn descents(&self, w: Element, side: Side) -> GenSet {
        (0..self.rank())
            .filter(|&s| self.is_descent(w, s, side))
            .collect()
    }

    pub fn first_descent(&self, w: Element, side: Side) -> Option<usize> {
        (0..self.rank()).find(|&s| self.is_descent(w, s, side))
    }

    /// Bruhat order, via the lifting recursion: for `s y < y`, `x <= y` iff
    /// `sx <= sy` when `sx < x`, and `x <= sy` otherwise.
    pub fn bruhat_leq(&self, x: Element, y: Element) -> bool {
        if self.length(x) > self.length(y) {
            return false;
        }
        let row = self.bruhat_row(y);
        row[x.index() / 64] >> (x.index() % 64) & 1 == 1
    }

    pub fn bruhat_lt(&self, x: Element, y: Element) -> bool {
        x != y && self.bruhat_leq(x, y)
    }

    fn bruhat_row(&self, y: Element) -> &[u64] {
        self.bruhat[y.index()].get_or_init(|| {
            let n = self.order();
            let mut row = vec![0u64; n.div_ceil(64)];
            let set = |row: &mut Vec<u64>, x: usize| row[x / 64] |= 1 << (x % 64);
            match self.first_descent(y, Side::Left) {
                None => set(&mut row, 0),
                Some(s) => {
                    let sy = self.mult_gen(y, s, Side::Left);
                    let below = self.bruhat_row(sy);
                    let has = |x: Element| below[x.index() / 64] >> (x.index() % 64) & 1 == 1;
                    for x in self.elements() {
                        if self.length(x) > self.length(y) {
                            break;
                        }
                        let sx = self.mult_gen(x, s, Side::Left);
                        let member = if self.length(sx) < self.length(x) {
                            has(sx)
                        } else {
                            has(x)
                        };
                        if member {
                            set(&mut row, x.index());
                        }
                    }
                }
            }
            row
        })
    }

    /// Elements of the parabolic subgroup `W_I`, in canonical order.
    pub fn parabolic_subgroup(&self, subset: GenSet) -> Vec<Element> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![Element::IDENTITY];
        while let Some(w) = stack.pop() {
            for s in subset.iter() {
                let ws = self.right[w.index()][s];
                if !seen[ws.index()] {
                    seen[ws.index()] = true;
                    stack.push(ws);
                }
            }
        }
        self.elements().filter(|w| seen[w.index()]).collect()
    }

    /// Always true: every subset of a finite system generates a finite group.
    pub fn is_finitary(&self, subset: GenSet) -> bool {
        subset.iter().all(|s| s < self.rank())
    }

    /// The longest element `w_I` of `W_I`.
    pub fn longest_in(&self, subset: GenSet) -> Element {
        *self
            .parabolic_subgroup(subset)
            .last()
            .expect("a parabolic subgroup contains the identity")
    }

    /// Poincare polynomial `sum_{w in W_I} v^{2 l(w)}`.
    pub fn poincare(&self, subset: GenSet) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.parabolic_subgroup(subset)
                .into_iter()
                .map(|w| (2 * self.length(w) as i32, 1)),
        )
    }

    /// Whether `w` is minimal in its coset `w W_I`.
    pub fn is_min_coset_rep(&self, w: Element, subset: GenSet) -> bool {
        subset.iter().all(|s| !self.is_descent(w, s, Side::Right))
    }

    /// Splits `w = y u` with `y` in `W^I`, `u` in `W_I` and lengths adding.
    pub fn coset_decompose(&self, w: Element, subset: GenSet) -> (Element, Element) {
        let (mut y, mut u) = (w, Element::IDENTITY);
        while let Some(s) = subset.iter().find(|&s| self.is_descent(y, s, Side::Right)) {
            y = self.mult_gen(y, s, Side::Right);
            u = self.mult_gen(u, s, Side::Left);
        }
        (y, u)
    }

    /// The projection `W -> W/W_I`, identified with `W^I`.
    pub fn project_q(&self, w: Element, subset: GenSet) -> Element {
        self.coset_decompose(w, subset).0
    }

    /// `W^I` in canonical order.
    pub fn min_reps(&self, subset: GenSet) -> Vec<Element> {
        self.elements()
            .filter(|&w| self.is_min_coset_rep(w, subset))
            .collect()
    }

    pub fn generator_label(&self, s: usize) -> String {
        format!("s{}", s + 1)
    }

    /// Canonical word rendering: `s1.s2.s3`, or `id` for the identity.
    pub fn word_string(&self, w: Element) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            return "id".into();
        }
        word.iter()
            .map(|&s| format!("s{}", s + 1))
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn parse_generator(&self, label: &str) -> Result<usize> {
        label
            .trim()
            .strip_prefix('s')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n >= 1 && n <= self.rank())
            .map(|n| n - 1)
            .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    /// Parses a dotted word like `s1.s2` (or `id`) into the element it spells.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let text = text.trim();
        if text.is_empty() || text == "id" || text == "e" {
            return Ok(Element::IDENTITY);
        }
        let word = text
            .split('.')
            .map(|g| self.parse_generator(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.from_word(&word))
    }

    /// Parses a comma separated generator list like `s1,s3`; empty means the
    /// empty subset.
    pub fn parse_subset(&self, text: &str) -> Result<GenSet> {
        text.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|g| self.parse_generator(g))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(name: &str) -> CoxeterSystem {
        CoxeterSystem::named(name).unwrap()
    }

    #[test]
    fn orders() {
        let cases = [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 24, 6),
            ("A4", 120, 10),
            ("B2", 8, 4),
            ("B3", 48, 9),
            ("G2", 12, 6),
            ("I2(7)", 14, 7),
            ("I2(2)", 4, 2),
            ("A1xA1", 4, 2),
            ("D4", 192, 12),
            ("F4", 1152, 24),
            ("A2xB2", 48, 7),
        ];
        for (name, order, top) in cases {
            let w = sys(name);
            assert_eq!(w.order(), order, "{name}");
            assert_eq!(w.length(w.longest()), top, "{name}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            CoxeterSystem::named("H3"),
            Err(Error::UnsupportedBond { label: 5, .. })
        ));
        // affine A2: a 3-cycle of bonds 3
        let affine = CoxeterMatrix::from_upper(3, &[3, 3, 3]).unwrap();
        assert!(matches!(
            CoxeterSystem::build(affine, 1000),
            Err(Error::GroupTooLarge { cap: 1000 })
        ));
        let a3 = CoxeterMatrix::from_name("A3").unwrap();
        assert!(matches!(
            CoxeterSystem::build(a3, 10),
            Err(Error::GroupTooLarge { .. })
        ));
        let i27 = CoxeterMatrix::from_name("I2(7)").unwrap();
        assert!(CoxeterSystem::build(i27, 13).is_err());
    }

    #[test]
    fn identity_and_generators() {
        let w = sys("A3");
        assert_eq!(w.length(w.identity()), 0);
        assert!(w.reduced_word(w.identity()).is_empty());
        assert_eq!(w.word_string(w.identity()), "id");
        for s in 0..3 {
            assert_eq!(w.reduced_word(w.generator(s)), &[s as u8]);
            assert_eq!(w.element(s + 1), w.generator(s));
        }
        // canonical order: length, then lexicographic word
        assert_eq!(w.word_string(w.element(4)), "s1.s2");
        assert_eq!(w.word_string(w.longest()), "s1.s2.s1.s3.s2.s1");
    }

    #[test]
    fn words_replay_and_inverses() {
        for name in ["A3", "B3", "I2(5)", "A1xA1"] {
            let w = sys(name);
            for x in w.elements() {
                let word: Vec<usize> = w.reduced_word(x).iter().map(|&s| s as usize).collect();
                assert_eq!(word.len() as u32, w.length(x));
                assert_eq!(w.from_word(&word), x);
                assert_eq!(w.inverse(w.inverse(x)), x);
                assert_eq!(w.mul(x, w.inverse(x)), w.identity());
                for s in 0..w.rank() {
                    let xs = w.mult_gen(x, s, Side::Right);
                    assert_eq!(w.length(xs).abs_diff(w.length(x)), 1);
                    assert_eq!(w.mult_gen(xs, s, Side::Right), x);
                    let sx = w.mult_gen(x, s, Side::Left);
                    assert_eq!(sx, w.inverse(w.mult_gen(w.inverse(x), s, Side::Right)));
                }
            }
        }
    }

    #[test]
    fn dihedral_words_are_alternating() {
        let w = sys("I2(5)");
        for x in w.elements() {
            let word = w.reduced_word(x);
            assert!(word.windows(2).all(|p| p[0] != p[1]));
        }
    }

    #[test]
    fn bruhat_basic() {
        let w = sys("A3");
        for x in w.elements() {
            assert!(w.bruhat_leq(w.identity(), x));
            assert!(w.bruhat_leq(x, x));
            assert!(w.bruhat_leq(x, w.longest()));
        }
        let (s1, s3) = (w.generator(0), w.generator(2));
        assert!(!w.bruhat_leq(s1, s3));
    }

    #[test]
    fn parabolics() {
        let w = sys("A3");
        let st: GenSet = [0, 1].into_iter().collect();
        let w_i = w.longest_in(st);
        assert_eq!(w.word_string(w_i), "s1.s2.s1");
        assert_eq!(
            w.poincare(st),
            LaurentPoly::from_terms([(0, 1), (2, 2), (4, 2), (6, 1)])
        );
        assert!(w.poincare(GenSet::EMPTY).is_one());
        assert_eq!(
            w.poincare([1].into_iter().collect()),
            LaurentPoly::from_terms([(0, 1), (2, 1)])
        );
        assert_eq!(w.min_reps(st).len(), 4);
        assert_eq!(w.project_q(w.identity(), st), w.identity());
        let (y, u) = w.coset_decompose(w.longest(), st);
        assert_eq!(u, w_i);
        assert_eq!(y, *w.min_reps(st).last().unwrap());
        assert_eq!(w.length(y) + w.length(u), w.length(w.longest()));
    }

    #[test]
    fn coset_decomposition_is_valid() {
        let w = sys("B3");
        for bits in 0..8 {
            let subset = GenSet::from_bits(bits);
            let wi = w.parabolic_subgroup(subset);
            for x in w.elements() {
                let (y, u) = w.coset_decompose(x, subset);
                assert!(w.is_min_coset_rep(y, subset));
                assert!(wi.contains(&u));
                assert_eq!(w.mul(y, u), x);
                assert_eq!(w.length(y) + w.length(u), w.length(x));
            }
        }
    }

    #[test]
    fn parsing() {
        let w = sys("A3");
        assert_eq!(w.parse_element("s1.s2").unwrap(), w.element(4));
        assert_eq!(w.parse_element("id").unwrap(), w.identity());
        assert_eq!(w.parse_element("s1.s1").unwrap(), w.identity());
        assert!(w.parse_element("s4").is_err());
        assert_eq!(w.parse_subset("s1, s2").unwrap(), GenSet::from_bits(0b011));
        assert_eq!(w.parse_subset("").unwrap(), GenSet::EMPTY);
        assert!(w.parse_subset("t").is_err());
        assert_eq!(GenSet::from_bits(0b101).to_string(), "{s1,s3}");
    }
}
