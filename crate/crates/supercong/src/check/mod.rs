//! The check catalog: every identity, congruence, and conjecture scan the
//! tool can run, each under a stable id.
//!
//! Families: `I*` exact identities over an `n` range, `Q*` q-analogue
//! identities, `C*` congruences modulo prime powers over a prime range,
//! `X*` conjecture scans. Congruence entries carry a prime threshold;
//! primes below it are skipped, never failed. Conjecture entries can only
//! report "no counterexample in range" or a concrete counterexample,
//! never a proof.
//!
//! Results are deterministic: for a fixed selection and parameters the
//! emitted records are identical run to run (including across worker
//! widths) except for elapsed timings.

mod congruences;
mod conjectures;
mod identities;
mod qchecks;

use crate::error::Result;
use crate::exact::{Int, Rat};
use crate::modular::{bernoulli_table, euler_table};
use crate::seq::{SeqId, SeqTable, TableSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// What kind of statement a catalog entry verifies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Identity,
    QIdentity,
    Congruence,
    Conjecture,
}

impl Kind {
    pub fn label(&self) -> &'static str {
        match self {
            Kind::Identity => "identity",
            Kind::QIdentity => "q",
            Kind::Congruence => "congruence",
            Kind::Conjecture => "conjecture",
        }
    }
}

/// Prime admission threshold for congruence entries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Threshold {
    /// `p > 3`.
    Gt3,
    /// `p > 5`.
    Gt5,
    /// odd primes.
    Odd,
    /// every prime.
    Any,
}

impl Threshold {
    pub fn admits(&self, p: u64) -> bool {
        match self {
            Threshold::Gt3 => p > 3,
            Threshold::Gt5 => p > 5,
            Threshold::Odd => p % 2 == 1,
            Threshold::Any => true,
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Threshold::Gt3 => "p>3",
            Threshold::Gt5 => "p>5",
            Threshold::Odd => "odd p",
            Threshold::Any => "any p",
        })
    }
}

/// How polynomial congruences are compared.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum XMode {
    /// Coefficient-wise comparison of both sides (the default).
    #[default]
    Coefficient,
    /// Substitute each configured `x` point, then compare values.
    Eval,
}

impl fmt::Display for XMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            XMode::Coefficient => "coefficient",
            XMode::Eval => "eval",
        })
    }
}

impl FromStr for XMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "coefficient" => Ok(XMode::Coefficient),
            "eval" => Ok(XMode::Eval),
            _ => Err(format!("unknown mode '{s}' (expected coefficient or eval)")),
        }
    }
}

/// Parameters shared by a run of checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RunParams {
    /// Upper bound for identity and conjecture `n` ranges.
    pub n_max: u64,
    /// Inclusive prime range for congruence entries.
    pub primes: (u64, u64),
    pub mode: XMode,
    /// Evaluation points used by [`XMode::Eval`].
    pub x_points: Vec<i64>,
    /// Highest odd power `2r+1` scanned by X06.
    pub r_max: u64,
    /// Seed for the randomized identity runs (I05).
    pub seed: u64,
}

impl Default for RunParams {
    fn default() -> Self {
        RunParams {
            n_max: 30,
            primes: (5, 47),
            mode: XMode::Coefficient,
            x_points: vec![-3, -1, 0, 1, 2],
            r_max: 3,
            seed: 20150917,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIP")]
    Skip,
}

/// First failing instance of a check, with both sides exactly.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

pub type Table = Vec<BTreeMap<String, String>>;

/// A finished check, as it appears in reports.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub params: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub skip_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub table: Option<Table>,
    pub elapsed_ms: u64,
}

/// Runner output before the orchestrator attaches id, params and timing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub status: Status,
    pub witness: Option<Witness>,
    pub skip_reason: Option<String>,
    pub table: Option<Table>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            witness: None,
            skip_reason: None,
            table: None,
        }
    }

    pub fn fail(at: String, lhs: String, rhs: String) -> Self {
        Outcome {
            status: Status::Fail,
            witness: Some(Witness { at, lhs, rhs }),
            skip_reason: None,
            table: None,
        }
    }

    pub fn skip(reason: String) -> Self {
        Outcome {
            status: Status::Skip,
            witness: None,
            skip_reason: Some(reason),
            table: None,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }
}

/// Precomputed shared state for one run: sequence prefixes plus Bernoulli
/// and Euler tables. Immutable once built, so checks read it from many
/// threads.
pub struct Ctx {
    pub seq: SeqTable,
    pub bernoulli: Vec<Rat>,
    pub euler: Vec<Int>,
}

impl Ctx {
    /// Bernoulli `B_n`; panics if the run did not reserve the prefix.
    pub fn bern(&self, n: u64) -> &Rat {
        &self.bernoulli[n as usize]
    }

    pub fn euler_num(&self, n: u64) -> &Int {
        &self.euler[n as usize]
    }
}

/// Deliberate table corruption used by the witness-integrity fixture.
#[derive(Clone, Debug)]
pub struct Perturbation {
    pub id: SeqId,
    pub index: u64,
    pub delta: Int,
}

impl FromStr for Perturbation {
    type Err = String;

    /// Parses `seq:index:delta`, e.g. `g:4:1`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected seq:index:delta, got '{s}'"));
        }
        Ok(Perturbation {
            id: parts[0].parse()?,
            index: parts[1].parse().map_err(|e| format!("bad index: {e}"))?,
            delta: parts[2]
                .parse::<i64>()
                .map_err(|e| format!("bad delta: {e}"))?
                .into(),
        })
    }
}

type Runner = fn(&Ctx, &RunParams) -> Outcome;

/// One catalog row.
pub struct CheckEntry {
    pub id: &'static str,
    pub kind: Kind,
    /// Short label tying the entry to its source statement.
    pub anchor: &'static str,
    pub threshold: Option<Threshold>,
    /// Modulus shape for congruences, e.g. `mod p^4`.
    pub modulus: Option<&'static str>,
    /// Whether the entry compares polynomials in `x` (and so honors
    /// [`RunParams::mode`]).
    pub xmode: bool,
    pub description: &'static str,
    run: Runner,
}

impl CheckEntry {
    pub fn run(&self, ctx: &Ctx, params: &RunParams) -> Outcome {
        (self.run)(ctx, params)
    }

    /// The parameter echo recorded next to every result.
    pub fn params_string(&self, p: &RunParams) -> String {
        let primes = format!("primes={}..{}", p.primes.0, p.primes.1);
        match self.kind {
            Kind::Identity => match self.id {
                "I05" => format!("n_max={};runs=3;seed={}", p.n_max, p.seed),
                "I07" => format!("m,n<={};x,y=-2..3", p.n_max.min(8)),
                "I22" => format!("k_max={};p in 2..13", p.n_max.min(30)),
                _ => format!("n_max={}", p.n_max),
            },
            Kind::QIdentity => format!("n_max={}", p.n_max.min(12)),
            Kind::Congruence => {
                if self.xmode {
                    match p.mode {
                        XMode::Coefficient => format!("{primes};mode=coefficient"),
                        XMode::Eval => format!(
                            "{primes};mode=eval;x={}",
                            p.x_points
                                .iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                    }
                } else {
                    primes
                }
            }
            Kind::Conjecture => match self.id {
                "X03" => format!("n_max={}", p.n_max),
                "X05" | "X07" => primes,
                "X06" => format!("{primes};r_max={}", p.r_max),
                _ => format!("n_max={};{primes}", p.n_max),
            },
        }
    }
}

fn ident(id: &'static str, anchor: &'static str, description: &'static str, run: Runner) -> CheckEntry {
    CheckEntry {
        id,
        kind: Kind::Identity,
        anchor,
        threshold: None,
        modulus: None,
        xmode: false,
        description,
        run,
    }
}

fn qent(id: &'static str, anchor: &'static str, description: &'static str, run: Runner) -> CheckEntry {
    CheckEntry {
        id,
        kind: Kind::QIdentity,
        anchor,
        threshold: None,
        modulus: None,
        xmode: false,
        description,
        run,
    }
}

fn cong(
    id: &'static str,
    anchor: &'static str,
    threshold: Threshold,
    modulus: &'static str,
    xmode: bool,
    description: &'static str,
    run: Runner,
) -> CheckEntry {
    CheckEntry {
        id,
        kind: Kind::Congruence,
        anchor,
        threshold: Some(threshold),
        modulus: Some(modulus),
        xmode,
        description,
        run,
    }
}

fn conj(
    id: &'static str,
    anchor: &'static str,
    threshold: Option<Threshold>,
    description: &'static str,
    run: Runner,
) -> CheckEntry {
    CheckEntry {
        id,
        kind: Kind::Conjecture,
        anchor,
        threshold,
        modulus: None,
        xmode: false,
        description,
        run,
    }
}

/// The full catalog, in report order.
pub fn catalog() -> &'static [CheckEntry] {
    static CATALOG: OnceLock<Vec<CheckEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

fn build_catalog() -> Vec<CheckEntry> {
    use Threshold::*;
    vec![
        ident("I01", "(1.1)", "Apery numbers as a binomial transform of Franel numbers", identities::i01),
        ident("I02", "(1.3)", "g_n as a binomial transform of Franel numbers", identities::i02),
        ident("I03", "(1.11)", "odd-weighted partial sums of g_k equal a Catalan convolution times 3n^2", identities::i03),
        ident("I04", "(1.16)", "normalized Franel partial sums with falling powers of 8", identities::i04),
        ident("I05", "(2.2)-(2.4)", "binomial-transform partial-sum identities on seeded random inputs", identities::i05),
        ident("I06", "(2.5)", "alternating odd-weighted inner binomial sum", identities::i06),
        ident("I07", "(2.6)", "three-binomial product identity at integer points", identities::i07),
        ident("I08", "(2.7)", "f_n(x) and g_n(x) binomial transforms, both directions", identities::i08),
        ident("I09", "(2.8)/(2.11)", "A_n(x) expanded over f_k(x) and over g_k(x)", identities::i09),
        ident("I10", "(2.9)", "odd-weighted partial sums of A_k(x) stay integral after dividing by n", identities::i10),
        ident("I11", "(2.10)", "alternating odd-weighted partial sums of A_k(x)", identities::i11),
        ident("I12", "(2.16)", "cubic-weighted alternating Apery sums divisible by n^3", identities::i12),
        ident("I13", "(2.17)", "weighted Franel sums divisible by n^2", identities::i13),
        ident("I14", "integrality", "normalized alternating Franel sums are integers", identities::i14),
        ident("I15", "recurrence", "Franel three-term recurrence against direct summation", identities::i15),
        ident("I16", "recurrence", "g_n(-1) four-term recurrence against direct summation", identities::i16),
        ident("I17", "recurrence", "Catalan-convolution three-term recurrence against both defining sums", identities::i17),
        ident("I18", "integrality", "odd-weighted Apery polynomial sums divisible by n coefficient-wise", identities::i18),
        ident("I19", "integrality", "alternating odd-weighted Apery polynomial sums divisible by n coefficient-wise", identities::i19),
        ident("I20", "inner sum", "cubic-weight alternating inner binomial sum in closed form", identities::i20),
        ident("I21", "inner sum", "odd-weight inner binomial sum in closed form", identities::i21),
        ident("I22", "recurrence", "negative-index binomial sum recurrence and its seed value", identities::i22),
        qent("Q01", "(2.14)", "q-analogue expansion of A_n(x; q) over g_k(x; q)", qchecks::q01),
        qent("Q02", "(2.15)", "triple-product Gaussian binomial inner identity", qchecks::q02),
        qent("Q03", "negative index", "negative-index Gaussian binomials against the product formula", qchecks::q03),
        qent("Q04", "q-Chu-Vandermonde", "q-Chu-Vandermonde instance with negative upper indices", qchecks::q04),
        qent("Q05", "q -> 1", "q-objects specialize to their classical counterparts at q = 1", qchecks::q05),
        cong("C01", "Wolstenholme", Gt3, "mod p^3", false, "central binomial and harmonic Wolstenholme trio", congruences::c01),
        cong("C02", "(1.4)", Gt3, "mod p^4", true, "g_k(x) partial sums against odd reciprocals, harmonic-corrected", congruences::c02),
        cong("C03", "(1.5)", Gt3, "mod p^4", false, "g_k partial sums with harmonic correction and a Bernoulli tail", congruences::c03),
        cong("C04", "(1.6)", Gt3, "mod p^3", false, "g_k(-1) partial sums with harmonic correction and an Euler tail", congruences::c04),
        cong("C05", "(1.7)", Gt3, "mod p^2", false, "g_k(-3) partial sums hit a quadratic-residue sign", congruences::c05),
        cong("C06", "(1.8)", Gt3, "mod p", true, "g_k(x)/k sums vanish coefficient-wise", congruences::c06),
        cong("C07", "(1.9)", Gt3, "mod p", false, "g_(k-1)/k sums against the Fermat quotient of 3", congruences::c07),
        cong("C08", "(1.10)", Gt3, "mod p^2", false, "k g_k sums land on -3/4", congruences::c08),
        cong("C09", "(1.12)", Gt5, "mod p", false, "g_k(-1)/k^2 sums vanish", congruences::c09),
        cong("C10", "(1.13)", Gt5, "mod p^2", false, "g_k(-1)/k sums vanish", congruences::c10),
        cong("C11", "(1.14)", Gt5, "mod p", false, "harmonic-weighted f_k(-1)/k sums against an Euler number", congruences::c11),
        cong("C12", "(1.15)", Gt3, "mod p^5", false, "(3k+1) f_k / 8^k sums against Fermat quotients of 2", congruences::c12),
        cong("C13", "symmetry", Gt3, "mod p", false, "g_k mirrors g_(p-1-k) through powers of 9", congruences::c13),
        cong("C14", "symmetry sum", Gt3, "mod p", false, "g_k/(k 9^k) sums against the Fermat quotient of 3", congruences::c14),
        cong("C15", "(2.12)", Odd, "mod p^2", true, "A_k(x) partial sums against alternating f_k(x) over odd reciprocals", congruences::c15),
        cong("C16", "(2.13)", Odd, "mod p^2", true, "alternating A_k(x) partial sums against g_k(x) over odd reciprocals", congruences::c16),
        cong("C17", "(2.18)", Gt3, "mod p^3", false, "odd-weighted alternating Apery sums land on p times a sign", congruences::c17),
        cong("C18", "(2.19)", Gt3, "mod p^3", false, "cubed odd weights land on -p/3 times a sign", congruences::c18),
        cong("C19", "(2.20)", Gt3, "mod p^3", false, "fifth-power odd weights land on -13p/27 times a sign", congruences::c19),
        cong("C20", "(2.21)", Gt3, "mod p^3", false, "seventh-power odd weights land on 5p/9 times a sign", congruences::c20),
        cong("C21", "(3.1)", Odd, "mod p^4", true, "odd-weighted A_k(x) sums over p against harmonic-corrected g_k(x) sums", congruences::c21),
        cong("C22", "(3.2)", Odd, "mod p^4", false, "signed binomial products equal 1 - p^2 H2_k for every k < p", congruences::c22),
        cong("C23", "(3.3)", Gt3, "mod p^2", false, "g_(p-1) against the Fermat quotient of 3", congruences::c23),
        cong("C24", "(3.4)", Odd, "mod p^2", false, "p times the (-3)^k odd-reciprocal sum hits a sign", congruences::c24),
        cong("C25", "(3.5)", Any, "mod p^2", false, "k C(2k,k) times negative-index binomial sums land on p", congruences::c25),
        cong("C26", "(3.6)", Gt3, "mod p^2", true, "g_k(x)/k sums split into tail monomials and harmonic f_k(x) sums", congruences::c26),
        cong("C27", "(3.7)", Gt5, "mod p", false, "alternating central-binomial over k^2 sums vanish", congruences::c27),
        cong("C28", "half range", Gt5, "mod p^2", false, "half-range alternating central binomials against a Bernoulli value", congruences::c28),
        cong("C29a", "central/k4^k", Gt3, "mod p", false, "central binomial over k 4^k sums against the Fermat quotient of 2", congruences::c29a),
        cong("C29b", "central/k", Gt3, "mod p^2", false, "central binomial over k sums vanish", congruences::c29b),
        cong("C30a", "alternating f/k^2", Gt3, "mod p", false, "alternating Franel over k^2 sums vanish", congruences::c30a),
        cong("C30b", "alternating f/k", Gt3, "mod p^2", false, "alternating Franel over k sums vanish", congruences::c30b),
        conj("X01", "scan (i)", Some(Odd), "alternating (9k^2+5k) f_k sums: divisibility and a mod p^4 form", conjectures::x01),
        conj("X02", "scan (ii)", Some(Any), "odd-weighted g_k(x) and g_k(-1) sums: integrality, parity, mod p^3 form", conjectures::x02),
        conj("X03", "scan nu_3", None, "3-adic valuation of odd-weighted alternating Apery sums", conjectures::x03),
        conj("X04", "scan F,G", Some(Gt3), "alternating F_k sums and G_k sums: parity, signs, a Bernoulli tail", conjectures::x04),
        conj("X05", "scan 9^k", Some(Gt3), "g-family sums through powers of 9 modulo p^2", conjectures::x05),
        conj("X06", "odd-power scan", Some(Gt3), "residues of odd-power-weighted alternating Apery sums, lifted to rationals", conjectures::x06),
        conj("X07", "companions", Some(Gt3), "alternating Franel sums and h_k partial sums modulo p^2", conjectures::x07),
    ]
}

/// Looks up one entry by id.
pub fn entry(id: &str) -> Option<&'static CheckEntry> {
    catalog().iter().find(|e| e.id == id)
}

/// Expands a selection string (`all`, comma-separated ids, or id prefixes
/// such as `C29`) into catalog order.
pub fn resolve_selection(spec: &str) -> std::result::Result<Vec<&'static str>, String> {
    let cat = catalog();
    if spec.trim() == "all" {
        return Ok(cat.iter().map(|e| e.id).collect());
    }
    let mut wanted: Vec<&'static str> = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let matches: Vec<&'static str> = cat
            .iter()
            .filter(|e| e.id == token || (e.id.starts_with(token) && token.len() >= 2))
            .map(|e| e.id)
            .collect();
        if matches.is_empty() {
            return Err(format!("unknown check id '{token}'"));
        }
        for m in matches {
            if !wanted.contains(&m) {
                wanted.push(m);
            }
        }
    }
    if wanted.is_empty() {
        return Err("empty check selection".into());
    }
    let mut ordered: Vec<&'static str> = cat
        .iter()
        .map(|e| e.id)
        .filter(|id| wanted.contains(id))
        .collect();
    ordered.dedup();
    Ok(ordered)
}

fn bump(slot: &mut Option<u64>, v: u64) {
    *slot = Some(slot.map_or(v, |old| old.max(v)));
}

/// Builds the shared context sized for the given selection.
pub fn prepare_ctx(ids: &[&str], params: &RunParams, perturbations: &[Perturbation]) -> Result<Ctx> {
    let p_hi = params.primes.1;
    let n_max = params.n_max;
    let scalar_hi = (n_max + 3).max(p_hi);

    let mut g_poly: Option<u64> = None;
    let mut f_poly: Option<u64> = None;
    let mut a_poly: Option<u64> = None;
    let mut bern: Option<u64> = None;
    let mut euler: Option<u64> = None;

    for id in ids {
        match *id {
            "I08" => {
                bump(&mut g_poly, n_max);
                bump(&mut f_poly, n_max);
            }
            "I09" | "I11" => {
                bump(&mut g_poly, n_max);
                bump(&mut f_poly, n_max);
                bump(&mut a_poly, n_max);
            }
            "I10" => {
                bump(&mut g_poly, n_max);
                bump(&mut a_poly, n_max);
            }
            "I18" | "I19" => bump(&mut a_poly, n_max),
            "X02" => bump(&mut g_poly, n_max),
            "C02" | "C06" => bump(&mut g_poly, p_hi),
            "C16" | "C21" => {
                bump(&mut g_poly, p_hi);
                bump(&mut a_poly, p_hi);
            }
            "C15" => {
                bump(&mut f_poly, p_hi);
                bump(&mut a_poly, p_hi);
            }
            "C26" => {
                bump(&mut g_poly, p_hi);
                bump(&mut f_poly, p_hi);
            }
            "C03" | "C28" | "X04" => bump(&mut bern, p_hi),
            "C04" | "C11" => bump(&mut euler, p_hi),
            _ => {}
        }
    }

    let spec = TableSpec {
        scalar_hi,
        g_poly_hi: g_poly,
        f_poly_hi: f_poly,
        a_poly_hi: a_poly,
    };
    let mut seq = SeqTable::build(&spec);
    for pert in perturbations {
        seq.perturb(pert.id, pert.index, &pert.delta)?;
    }
    Ok(Ctx {
        seq,
        bernoulli: bern.map_or_else(Vec::new, |hi| bernoulli_table(hi as usize)),
        euler: euler.map_or_else(Vec::new, |hi| euler_table(hi as usize)),
    })
}

/// Runs the selected checks against a prepared context, in catalog order,
/// spreading independent entries across `jobs` workers.
pub fn run_checks(ctx: &Ctx, ids: &[&str], params: &RunParams, jobs: usize) -> Vec<CheckResult> {
    let entries: Vec<&CheckEntry> = ids.iter().filter_map(|id| entry(id)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool");
    pool.install(|| {
        entries
            .par_iter()
            .map(|e| {
                let start = std::time::Instant::now();
                let outcome = e.run(ctx, params);
                CheckResult {
                    id: e.id.to_string(),
                    params: e.params_string(params),
                    status: outcome.status,
                    witness: outcome.witness,
                    skip_reason: outcome.skip_reason,
                    table: outcome.table,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                }
            })
            .collect()
    })
}

/// Convenience: prepare a context and run in one step.
pub fn run_selection(spec: &str, params: &RunParams, jobs: usize) -> std::result::Result<Vec<CheckResult>, String> {
    let ids = resolve_selection(spec)?;
    let ctx = prepare_ctx(&ids, params, &[]).map_err(|e| e.to_string())?;
    Ok(run_checks(&ctx, &ids, params, jobs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_are_unique_and_ordered() {
        let cat = catalog();
        assert_eq!(cat.len(), 66);
        let mut seen = std::collections::BTreeSet::new();
        for e in cat {
            assert!(seen.insert(e.id), "duplicate id {}", e.id);
        }
        assert_eq!(cat[0].id, "I01");
        assert_eq!(cat.last().unwrap().id, "X07");
        let kinds: Vec<usize> = [Kind::Identity, Kind::QIdentity, Kind::Congruence, Kind::Conjecture]
            .iter()
            .map(|k| cat.iter().filter(|e| e.kind == *k).count())
            .collect();
        assert_eq!(kinds, [22, 5, 32, 7]);
    }

    #[test]
    fn selection_expansion() {
        assert_eq!(resolve_selection("all").unwrap().len(), 66);
        assert_eq!(resolve_selection("C05,C08").unwrap(), ["C05", "C08"]);
        assert_eq!(resolve_selection("C29").unwrap(), ["C29a", "C29b"]);
        assert_eq!(resolve_selection("C08,C05").unwrap(), ["C05", "C08"]);
        assert!(resolve_selection("C99").is_err());
        assert!(resolve_selection("").is_err());
    }

    #[test]
    fn thresholds_admit_expected_primes() {
        assert!(!Threshold::Gt3.admits(3));
        assert!(Threshold::Gt3.admits(5));
        assert!(!Threshold::Gt5.admits(5));
        assert!(Threshold::Odd.admits(3));
        assert!(!Threshold::Odd.admits(2));
        assert!(Threshold::Any.admits(2));
    }

    #[test]
    fn perturbation_parsing() {
        let p: Perturbation = "g:4:1".parse().unwrap();
        assert_eq!(p.id, crate::seq::SeqId::G);
        assert_eq!(p.index, 4);
        assert_eq!(p.delta, crate::exact::int(1));
        assert!("g:4".parse::<Perturbation>().is_err());
        assert!("bogus:4:1".parse::<Perturbation>().is_err());
    }
}
