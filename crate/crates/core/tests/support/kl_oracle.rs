//! Test-only reference implementations: permutations for type A, an
//! explicit dihedral model, and a standard-basis Hecke algebra that finds the
//! KL basis by solving the bar-invariance equations triangularly.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;

use soergel::coxeter::CoxeterSystem;
use soergel::hecke::Hecke;
use soergel::laurent::LaurentPoly;

/// A group given by its right action of the simple reflections.
pub trait Model {
    type E: Clone + Eq + Hash;
    fn rank(&self) -> usize;
    fn id(&self) -> Self::E;
    fn right(&self, e: &Self::E, s: usize) -> Self::E;
}

/// `S_{n+1}` as one-line permutations; `s_i` swaps positions `i` and `i+1`.
pub struct Perms(pub usize);

impl Model for Perms {
    type E = Vec<u8>;
    fn rank(&self) -> usize {
        self.0
    }
    fn id(&self) -> Vec<u8> {
        (0..=self.0 as u8).collect()
    }
    fn right(&self, e: &Vec<u8>, s: usize) -> Vec<u8> {
        let mut p = e.clone();
        p.swap(s, s + 1);
        p
    }
}

pub fn inversions(p: &[u8]) -> u32 {
    let mut n = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            n += u32::from(p[i] > p[j]);
        }
    }
    n
}

/// Tableau criterion: `u <= w` iff for every `i` the sorted prefixes of
/// length `i` compare entrywise.
pub fn perm_bruhat_leq(u: &[u8], w: &[u8]) -> bool {
    (1..u.len()).all(|i| {
        let mut a = u[..i].to_vec();
        let mut b = w[..i].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

/// The dihedral group of order `2m` as `r^k f^e` with `f r = r^{-1} f`.
/// `s = f` and `t = r f`.
pub struct Dihedral(pub i64);

impl Model for Dihedral {
    type E = (i64, bool);
    fn rank(&self) -> usize {
        2
    }
    fn id(&self) -> (i64, bool) {
        (0, false)
    }
    fn right(&self, &(k, e): &(i64, bool), s: usize) -> (i64, bool) {
        let a = s as i64; // s = r^0 f, t = r^1 f
        let k = if e { k - a } else { k + a };
        (k.rem_euclid(self.0), !e)
    }
}

/// BFS over the Cayley graph: elements, lengths, and one reduced word each.
pub struct Cayley<M: Model> {
    pub model: M,
    pub elts: Vec<M::E>,
    pub index: HashMap<M::E, usize>,
    pub len: Vec<u32>,
    pub word: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

impl<M: Model> Cayley<M> {
    pub fn new(model: M) -> Self {
        let id = model.id();
        let mut elts = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut len = vec![0];
        let mut word = vec![vec![]];
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for s in 0..model.rank() {
                let e = model.right(&elts[i], s);
                if !index.contains_key(&e) {
                    index.insert(e.clone(), elts.len());
                    len.push(len[i] + 1);
                    let mut w = word[i].clone();
                    w.push(s);
                    word.push(w);
                    elts.push(e);
                    queue.push_back(elts.len() - 1);
                }
            }
        }
        let right = elts
            .iter()
            .map(|e| {
                (0..model.rank())
                    .map(|s| index[&model.right(e, s)])
                    .collect()
            })
            .collect();
        Self {
            model,
            elts,
            index,
            len,
            word,
            right,
        }
    }

    pub fn eval(&self, word: &[u8]) -> usize {
        let mut e = self.model.id();
        for &s in word {
            e = self.model.right(&e, s as usize);
        }
        self.index[&e]
    }
}

pub type Poly = BTreeMap<i32, i64>;

pub fn padd(a: &mut Poly, b: &Poly, scale: i64, shift: i32) {
    for (&e, &c) in b {
        let slot = a.entry(e + shift).or_insert(0);
        *slot += c * scale;
        if *slot == 0 {
            a.remove(&(e + shift));
        }
    }
}

pub fn pbar(p: &Poly) -> Poly {
    p.iter().map(|(&e, &c)| (-e, c)).collect()
}

pub fn pmul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&e, &c) in a {
        padd(&mut out, b, c, e);
    }
    out
}

pub fn to_poly(p: &LaurentPoly) -> Poly {
    p.terms()
        .map(|(e, c)| (e, i64::try_from(c).expect("small coefficient")))
        .collect()
}

/// Standard-basis Hecke algebra on top of a Cayley table, written directly
/// from the quadratic relation.
pub struct OracleHecke<M: Model> {
    pub g: Cayley<M>,
    /// `r[z][y]`: coefficient of `H_y` in `bar(H_z)`.
    pub r: Vec<Vec<Poly>>,
}

impl<M: Model> OracleHecke<M> {
    pub fn new(g: Cayley<M>) -> Self {
        let n = g.elts.len();
        let mut r = Vec::with_capacity(n);
        for z in 0..n {
            let mut h = vec![Poly::new(); n];
            h[0].insert(0, 1);
            for &s in &g.word[z] {
                // right multiplication by bar(H_s) = H_s + (v - v^{-1})
                let hs = Self::times_gen(&g, &h, s);
                let mut next = hs;
                for y in 0..n {
                    let c = h[y].clone();
                    padd(&mut next[y], &c, 1, 1);
                    padd(&mut next[y], &c, -1, -1);
                }
                h = next;
            }
            r.push(h);
        }
        Self { g, r }
    }

    fn times_gen(g: &Cayley<M>, h: &[Poly], s: usize) -> Vec<Poly> {
        let mut out = vec![Poly::new(); h.len()];
        for (x, c) in h.iter().enumerate() {
            if c.is_empty() {
                continue;
            }
            let xs = g.right[x][s];
            padd(&mut out[xs], c, 1, 0);
            if g.len[xs] < g.len[x] {
                padd(&mut out[x], c, 1, -1);
                padd(&mut out[x], c, -1, 1);
            }
        }
        out
    }

    /// Column `x` of the KL matrix: `h[y] = h_{y,x}`.
    pub fn kl_column(&self, x: usize) -> Vec<Poly> {
        let n = self.g.elts.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&y| std::cmp::Reverse(self.g.len[y]));
        let mut h = vec![Poly::new(); n];
        h[x].insert(0, 1);
        for &y in &order {
            if self.g.len[y] >= self.g.len[x] {
                continue;
            }
            // h_{y,x} - bar(h_{y,x}) = sum_{z != y} bar(h_{z,x}) r_{y,z}
            let mut p = Poly::new();
            for z in 0..n {
                if z != y && !h[z].is_empty() {
                    padd(&mut p, &pmul(&pbar(&h[z]), &self.r[z][y]), 1, 0);
                }
            }
            assert_eq!(
                p.get(&0),
                None,
                "the bar-solve needs an antisymmetric right side"
            );
            h[y] = p.into_iter().filter(|&(e, _)| e > 0).collect();
        }
        h
    }
}

/// First disagreement between the library's KL polynomials and the oracle.
pub fn kl_mismatch<M: Model>(sys: &CoxeterSystem, model: M) -> Option<String> {
    let oracle = OracleHecke::new(Cayley::new(model));
    if oracle.g.elts.len() != sys.order() {
        return Some(format!(
            "oracle has {} elements, library {}",
            oracle.g.elts.len(),
            sys.order()
        ));
    }
    let hk = Hecke::new(sys);
    let map: Vec<usize> = sys
        .elements()
        .map(|w| oracle.g.eval(sys.reduced_word(w)))
        .collect();
    for x in sys.elements() {
        let col = oracle.kl_column(map[x.index()]);
        for y in sys.elements() {
            let ours = to_poly(&hk.kl_poly(y, x));
            if ours != col[map[y.index()]] {
                return Some(format!(
                    "h_({},{}): library {ours:?}, oracle {:?}",
                    sys.word_string(y),
                    sys.word_string(x),
                    col[map[y.index()]]
                ));
            }
        }
    }
    None
}
