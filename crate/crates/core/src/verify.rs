//! Exhaustive invariant checks over a system and all of its parabolic
//! subsets. Each suite reports how many instances it checked, how many
//! failed, and the first counterexample.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Element, GenSet};
use crate::error::{Error, Result};
use crate::hecke::{Hecke, HeckeElt};
use crate::laurent::LaurentPoly;
use crate::parabolic::ParabolicModule;
use crate::rouquier::{euler_hom, rouquier_character, ComplexShape};
use crate::soergel::{bott_samelson_char, Character};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `H̲_x` is bar-invariant and `h_{y,x}` lies in `v Z_{>=0}[v]` for `y < x`.
    KlBar,
    /// `(H_x, H_y) = delta_{x,y}`.
    Orthonormality,
    /// `w >= v` implies `q(w) >= q(v)`.
    Monotonicity,
    /// `h^I_{y,x} = h_{y w_I, x w_I}`.
    ParabolicIdentity,
    /// The inversion formula, in both orders.
    Inversion,
    /// `g^I` has nonnegative coefficients and `g^I_{x,y}` is in `v Z[v]` for `x < y`.
    Positivity,
    /// `g^I_{y,x}` only has exponents of the parity of `l(x) - l(y)`.
    Parity,
    /// Degree-one coefficients of `g^I` and `h^I` agree, and match the first
    /// layer of the Rouquier shape.
    DegreeOne,
    /// `ch(F_x^I) = H_x^I`, with linear terms and the apex in degree zero.
    ShapeCharacter,
    /// Euler characteristic of `Hom(F_x^I, E_y^I)` is `delta_{x,y}`.
    EulerHom,
    /// `Hom(B_x^I, B_y^I)` vanishes in negative degree and is `delta_{x,y}` in degree 0.
    HomVanishing,
    /// Bott-Samelson characters decompose with coefficients in `Z_{>=0}[v, v^{-1}]`.
    BsPositivity,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::KlBar,
        Suite::Orthonormality,
        Suite::Monotonicity,
        Suite::ParabolicIdentity,
        Suite::Inversion,
        Suite::Positivity,
        Suite::Parity,
        Suite::DegreeOne,
        Suite::ShapeCharacter,
        Suite::EulerHom,
        Suite::HomVanishing,
        Suite::BsPositivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::KlBar => "kl-bar",
            Suite::Orthonormality => "orthonormality",
            Suite::Monotonicity => "monotonicity",
            Suite::ParabolicIdentity => "parabolic-identity",
            Suite::Inversion => "inversion",
            Suite::Positivity => "positivity",
            Suite::Parity => "parity",
            Suite::DegreeOne => "degree-one",
            Suite::ShapeCharacter => "shape-character",
            Suite::EulerHom => "euler-hom",
            Suite::HomVanishing => "hom-vanishing",
            Suite::BsPositivity => "bs-positivity",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: u64,
    pub failed: u64,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            checked: 0,
            failed: 0,
            first_counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Records one checked instance; `detail` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(detail());
            }
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn get(&self, suite: Suite) -> Option<&SuiteReport> {
        self.suites.iter().find(|r| r.suite == suite)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.suites {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status}\t{}\tchecked={}\tfailed={}",
                r.suite, r.checked, r.failed
            ));
            if let Some(c) = &r.first_counterexample {
                out.push_str(&format!("\tfirst: {c}"));
            }
            out.push('\n');
        }
        let failed = self.suites.iter().filter(|r| !r.passed()).count();
        out.push_str(&format!(
            "summary\t{} suites\t{failed} failed\n",
            self.suites.len()
        ));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.all_passed(),
            "suites": self.suites.iter().map(|r| json!({
                "suite": r.suite.name(),
                "checked": r.checked,
                "failed": r.failed,
                "first_counterexample": r.first_counterexample,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Settings for the randomized Bott-Samelson suite.
#[derive(Debug, Clone, Copy)]
pub struct BsSampling {
    pub words: usize,
    pub max_len: usize,
    pub seed: u64,
}

impl Default for BsSampling {
    fn default() -> Self {
        Self {
            words: 200,
            max_len: 8,
            seed: 0x5eed,
        }
    }
}

/// Runs `suites` on the system behind `hecke`, over every subset in `subsets`.
pub fn run(hecke: &Hecke<'_>, subsets: &[GenSet], suites: &[Suite], bs: BsSampling) -> Report {
    let modules: Vec<ParabolicModule<'_>> = subsets
        .iter()
        .map(|&i| ParabolicModule::new(hecke, i))
        .collect();
    let mut reports = Vec::new();
    for &suite in suites {
        let report = match suite {
            Suite::KlBar => check_kl_bar(hecke),
            Suite::Orthonormality => check_orthonormality(hecke),
            Suite::Monotonicity => per_module(suite, &modules, check_monotonicity),
            Suite::ParabolicIdentity => per_module(suite, &modules, check_parabolic_identity),
            Suite::Inversion => per_module(suite, &modules, check_inversion),
            Suite::Positivity => per_module(suite, &modules, check_positivity),
            Suite::Parity => per_module(suite, &modules, check_parity),
            Suite::DegreeOne => per_module(suite, &modules, check_degree_one),
            Suite::ShapeCharacter => per_module(suite, &modules, check_shape_character),
            Suite::EulerHom => per_module(suite, &modules, check_euler_hom),
            Suite::HomVanishing => per_module(suite, &modules, check_hom_vanishing),
            Suite::BsPositivity => check_bs_positivity(&modules, bs),
        };
        reports.push(report);
    }
    Report { suites: reports }
}

fn per_module(
    suite: Suite,
    modules: &[ParabolicModule<'_>],
    f: fn(&ParabolicModule<'_>) -> SuiteReport,
) -> SuiteReport {
    let mut total = SuiteReport::new(suite);
    for m in modules {
        total.absorb(f(m));
    }
    total
}

fn ctx(m: &ParabolicModule<'_>) -> String {
    format!("I={}", m.subset())
}

pub fn check_kl_bar(hecke: &Hecke<'_>) -> SuiteReport {
    let sys = hecke.system();
    let mut r = SuiteReport::new(Suite::KlBar);
    for x in sys.elements() {
        let kl = hecke.kl_basis(x);
        r.check(&hecke.bar(kl) == kl, || {
            format!("bar(H̲_{}) != H̲_{0}", sys.word_string(x))
        });
        r.check(kl.coeff(x).is_one(), || {
            format!("h_{{x,x}} != 1 at x={}", sys.word_string(x))
        });
        for (&y, h) in kl.iter() {
            if y == x {
                continue;
            }
            let ok = sys.bruhat_lt(y, x) && h.min_degree() >= Some(1) && h.is_nonneg();
            r.check(ok, || {
                format!("h_{{{},{}}} = {h}", sys.word_string(y), sys.word_string(x))
            });
        }
    }
    r
}

pub fn check_orthonormality(hecke: &Hecke<'_>) -> SuiteReport {
    let sys = hecke.system();
    let mut r = SuiteReport::new(Suite::Orthonormality);
    for x in sys.elements() {
        for y in sys.elements() {
            let p = hecke.pairing(&HeckeElt::basis(x), &HeckeElt::basis(y));
            let ok = if x == y { p.is_one() } else { p.is_zero() };
            r.check(ok, || {
                format!("(H_{}, H_{}) = {p}", sys.word_string(x), sys.word_string(y))
            });
        }
    }
    r
}

pub fn check_monotonicity(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let mut r = SuiteReport::new(Suite::Monotonicity);
    let q: Vec<Element> = sys
        .elements()
        .map(|w| sys.project_q(w, m.subset()))
        .collect();
    for w in sys.elements() {
        for v in sys.elements() {
            if sys.bruhat_leq(v, w) {
                let ok = sys.bruhat_leq(q[v.index()], q[w.index()]);
                r.check(ok, || {
                    format!(
                        "{}: {} <= {} but q fails",
                        ctx(m),
                        sys.word_string(v),
                        sys.word_string(w)
                    )
                });
            }
        }
    }
    r
}

pub fn check_parabolic_identity(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let hecke = m.hecke();
    let mut r = SuiteReport::new(Suite::ParabolicIdentity);
    for &x in m.reps() {
        let kl = m.parabolic_kl_basis(x);
        for &y in m.reps() {
            let direct = kl.coeff(y);
            let lifted = hecke.kl_poly(sys.mul(y, m.w_i()), sys.mul(x, m.w_i()));
            r.check(direct == lifted, || {
                format!(
                    "{}: h^I_{{{},{}}} = {direct} but h_{{yw_I,xw_I}} = {lifted}",
                    ctx(m),
                    sys.word_string(y),
                    sys.word_string(x)
                )
            });
        }
    }
    r
}

fn sign(parity: u32) -> LaurentPoly {
    LaurentPoly::from(if parity.is_multiple_of(2) { 1 } else { -1 })
}

/// Evaluates both orders of the inversion formula against the memoized
/// `h^I` and `g^I` tables.
pub fn check_inversion(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let mut r = SuiteReport::new(Suite::Inversion);
    let (h, g) = (m.h_table(), m.g_table());
    let n = m.reps().len();
    let len: Vec<u32> = m.reps().iter().map(|&y| sys.length(y)).collect();
    for a in 0..n {
        for b in 0..n {
            let mut left = LaurentPoly::zero();
            let mut right = LaurentPoly::zero();
            for y in 0..n {
                let s = sign(len[y] + len[a]);
                if !g[a][y].is_zero() && !h[y][b].is_zero() {
                    left += &(&(&g[a][y] * &h[y][b]) * &s);
                }
                // transposed: sum_y (-1)^{l(y)-l(b)} h_{a,y} g_{y,b}
                let t = sign(len[y] + len[b]);
                if !h[a][y].is_zero() && !g[y][b].is_zero() {
                    right += &(&(&h[a][y] * &g[y][b]) * &t);
                }
            }
            let delta = if a == b {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            };
            let (x, z) = (sys.word_string(m.reps()[a]), sys.word_string(m.reps()[b]));
            r.check(left == delta, || {
                format!(
                    "{}: sum_y (-1)^(l(y)-l(x)) g_(x,y) h_(y,z) = {left} at x={x}, z={z}",
                    ctx(m)
                )
            });
            r.check(right == delta, || {
                format!(
                    "{}: sum_y (-1)^(l(y)-l(z)) h_(x,y) g_(y,z) = {right} at x={x}, z={z}",
                    ctx(m)
                )
            });
        }
    }
    r
}

pub fn check_positivity(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let mut r = SuiteReport::new(Suite::Positivity);
    let g = m.g_table();
    for (a, &x) in m.reps().iter().enumerate() {
        for (b, &y) in m.reps().iter().enumerate() {
            let p = &g[a][b];
            let ok = p.is_nonneg()
                && match a.cmp(&b) {
                    std::cmp::Ordering::Equal => p.is_one(),
                    _ if p.is_zero() => true,
                    std::cmp::Ordering::Less => sys.bruhat_lt(x, y) && p.min_degree() >= Some(1),
                    std::cmp::Ordering::Greater => false,
                };
            r.check(ok, || {
                format!(
                    "{}: g_({},{}) = {p}",
                    ctx(m),
                    sys.word_string(x),
                    sys.word_string(y)
                )
            });
        }
    }
    r
}

pub fn check_parity(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let mut r = SuiteReport::new(Suite::Parity);
    let g = m.g_table();
    for (a, &y) in m.reps().iter().enumerate() {
        for (b, &x) in m.reps().iter().enumerate() {
            let gap = sys.length(x) as i64 - sys.length(y) as i64;
            for (i, _) in g[a][b].terms() {
                r.check((i as i64 - gap).rem_euclid(2) == 0, || {
                    format!(
                        "{}: g_({},{}) has v^{i} against l(x)-l(y) = {gap}",
                        ctx(m),
                        sys.word_string(y),
                        sys.word_string(x)
                    )
                });
            }
        }
    }
    r
}

pub fn check_degree_one(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let mut r = SuiteReport::new(Suite::DegreeOne);
    let (h, g) = (m.h_table(), m.g_table());
    for (b, &x) in m.reps().iter().enumerate() {
        let shape = ComplexShape::f_shape(m, x);
        let layer = shape.degree(1);
        for (a, &z) in m.reps().iter().enumerate().take(b) {
            let hc = h[a][b].coeff(1);
            let gc = g[a][b].coeff(1);
            r.check(hc == gc, || {
                format!(
                    "{}: coefficient of v in g_({z},{x}) is {gc}, in h is {hc}",
                    ctx(m),
                    z = sys.word_string(z),
                    x = sys.word_string(x)
                )
            });
            let in_shape = layer
                .iter()
                .find(|t| t.element == z)
                .map(|t| t.mult.clone())
                .unwrap_or_else(BigInt::zero);
            r.check(in_shape == hc, || {
                format!(
                    "{}: degree-one layer of F_{} has {in_shape} copies of B_{}, expected {hc}",
                    ctx(m),
                    sys.word_string(x),
                    sys.word_string(z)
                )
            });
        }
    }
    r
}

pub fn check_shape_character(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let mut r = SuiteReport::new(Suite::ShapeCharacter);
    for &x in m.reps() {
        let shape = ComplexShape::f_shape(m, x);
        let ch = shape.character(m);
        let expect = rouquier_character(m, x);
        r.check(ch == expect, || {
            format!(
                "{}: ch(F_{}) = {}",
                ctx(m),
                sys.word_string(x),
                ch.to_text(sys)
            )
        });
        let apex = shape.degree(0);
        r.check(
            apex.len() == 1 && apex[0].element == x && apex[0].shift == 0 && apex[0].mult.is_one(),
            || {
                format!(
                    "{}: degree 0 of F_{} is not B_x",
                    ctx(m),
                    sys.word_string(x)
                )
            },
        );
        for (d, t) in shape.terms() {
            if d == 0 {
                continue;
            }
            let parity =
                (d as i64 - sys.length(x) as i64 + sys.length(t.element) as i64).rem_euclid(2);
            let ok = t.shift == d && sys.bruhat_lt(t.element, x) && parity == 0 && d > 0;
            r.check(ok, || {
                format!(
                    "{}: F_{} has B_{}({}) in degree {d}",
                    ctx(m),
                    sys.word_string(x),
                    sys.word_string(t.element),
                    t.shift
                )
            });
        }
    }
    r
}

pub fn check_euler_hom(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let mut r = SuiteReport::new(Suite::EulerHom);
    let f: Vec<ComplexShape> = m
        .reps()
        .iter()
        .map(|&x| ComplexShape::f_shape(m, x))
        .collect();
    let e: Vec<ComplexShape> = m
        .reps()
        .iter()
        .map(|&x| ComplexShape::e_shape(m, x))
        .collect();
    for (a, fx) in f.iter().enumerate() {
        for (b, ey) in e.iter().enumerate() {
            let value = euler_hom(m, fx, ey);
            let ok = match &value {
                Ok(p) if a == b => p.is_one(),
                Ok(p) => p.is_zero(),
                Err(_) => false,
            };
            r.check(ok, || {
                format!(
                    "{}: chi Hom(F_{}, E_{}) = {value:?}",
                    ctx(m),
                    sys.word_string(m.reps()[a]),
                    sys.word_string(m.reps()[b])
                )
            });
        }
    }
    r
}

/// Graded ranks `Hom(B_x^I, B_y^I)` for all pairs, via one trace form per
/// row. Same values as [`crate::soergel::graded_hom_rank`] on deltas.
pub fn hom_rank_table(m: &ParabolicModule<'_>) -> Result<Vec<Vec<LaurentPoly>>> {
    let hecke = m.hecke();
    let pi = m.system().poincare(m.subset());
    let embedded: Vec<HeckeElt> = m
        .reps()
        .iter()
        .map(|&x| m.embed(m.parabolic_kl_basis(x)))
        .collect();
    embedded
        .iter()
        .map(|bx| {
            let form = hecke.trace_form(&hecke.bar(bx));
            embedded
                .iter()
                .map(|by| form.apply(by).div_exact(&pi))
                .collect()
        })
        .collect()
}

pub fn check_hom_vanishing(m: &ParabolicModule<'_>) -> SuiteReport {
    let sys = m.system();
    let mut r = SuiteReport::new(Suite::HomVanishing);
    let table = match hom_rank_table(m) {
        Ok(t) => t,
        Err(e) => {
            r.check(false, || format!("{}: {e}", ctx(m)));
            return r;
        }
    };
    for (a, row) in table.iter().enumerate() {
        for (b, rank) in row.iter().enumerate() {
            let constant = if a == b {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            let ok = rank.min_degree().is_none_or(|d| d >= 0) && rank.coeff(0) == constant;
            r.check(ok, || {
                format!(
                    "{}: grrk Hom(B_{}, B_{}) = {rank}",
                    ctx(m),
                    sys.word_string(m.reps()[a]),
                    sys.word_string(m.reps()[b])
                )
            });
        }
    }
    r
}

/// Random words of length `0..=max_len`, each paired with a random module.
pub fn check_bs_positivity(modules: &[ParabolicModule<'_>], bs: BsSampling) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::BsPositivity);
    if modules.is_empty() {
        return r;
    }
    let sys = modules[0].system();
    let mut rng = ChaCha8Rng::seed_from_u64(bs.seed);
    for _ in 0..bs.words {
        let m = &modules[rng.gen_range(0..modules.len())];
        let len = rng.gen_range(0..=bs.max_len);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..sys.rank())).collect();
        let c: Character = bott_samelson_char(m, &word);
        r.check(c.is_positive(), || {
            let w: Vec<String> = word.iter().map(|&s| sys.generator_label(s)).collect();
            format!(
                "{}: BS({}) = {}",
                ctx(m),
                w.join("."),
                c.to_text(sys).replace('\n', "; ")
            )
        });
    }
    r
}

/// Every subset of the generators (all are finitary in a finite group).
pub fn all_subsets(sys: &CoxeterSystem) -> Vec<GenSet> {
    GenSet::all_subsets(sys.rank()).collect()
}
