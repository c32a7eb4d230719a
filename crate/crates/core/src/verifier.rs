//! Exhaustive verification suites over enumerated graph universes, and
//! minimal-obstruction search.
//!
//! Lemma-tier suites check statements that are theorems; any counterexample
//! is a bug. Conjecture-tier suites report what they find. In every suite,
//! each verdict produced along the way has its certificate re-validated.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certificate::{validate, Certificate, Class, ClassVerdict};
use crate::classes::{
    classify, inclusion_violation, is_2divisible, is_2perfect, is_2perfect_search, is_nice,
    is_perfectly_divisible, is_stable_perfect, is_stable_perfect_search, Classification,
};
use crate::enumeration::{enumerate, EnumSpec, Filter, Source, BUILTIN_CAP};
use crate::error::{Error, Result};
use crate::format::{parse_graph6, write_graph6};
use crate::graph::{Graph, SizeLexSubsets};
use crate::invariants::{is_k_colorable, SubsetCache};
use crate::perfection::{
    find_odd_hole, is_perfect, is_perfect_by_definition, is_perfect_by_spgt, DEFINITION_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    Lemma3,
    Lemma4,
    Lemma6,
    InclusionChain,
    HoangMcdiarmid,
    PerfectOracleEquivalence,
    SelfDuality,
    Heredity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    Lemma,
    Conjecture,
}

impl SuiteId {
    pub const ALL: [SuiteId; 8] = [
        SuiteId::Lemma3,
        SuiteId::Lemma4,
        SuiteId::Lemma6,
        SuiteId::InclusionChain,
        SuiteId::HoangMcdiarmid,
        SuiteId::PerfectOracleEquivalence,
        SuiteId::SelfDuality,
        SuiteId::Heredity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Lemma3 => "lemma3",
            SuiteId::Lemma4 => "lemma4",
            SuiteId::Lemma6 => "lemma6",
            SuiteId::InclusionChain => "inclusion-chain",
            SuiteId::HoangMcdiarmid => "hoang-mcdiarmid",
            SuiteId::PerfectOracleEquivalence => "perfect-oracle-equivalence",
            SuiteId::SelfDuality => "self-duality",
            SuiteId::Heredity => "heredity",
        }
    }

    pub fn tier(self) -> Tier {
        match self {
            SuiteId::HoangMcdiarmid => Tier::Conjecture,
            _ => Tier::Lemma,
        }
    }

    /// Universe filter the suite quantifies over.
    pub fn filter(self) -> Filter {
        match self {
            SuiteId::Lemma3 | SuiteId::Lemma4 | SuiteId::Lemma6 => Filter::TriangleFree,
            _ => Filter::All,
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            SuiteId::Lemma3 | SuiteId::Lemma4 | SuiteId::Lemma6 => 8,
            _ => 7,
        }
    }

    /// Tightest vertex cap among the checkers the suite calls.
    pub fn cap(self) -> usize {
        use crate::classes::limits;
        match self {
            SuiteId::Lemma3 | SuiteId::PerfectOracleEquivalence => DEFINITION_CAP,
            SuiteId::SelfDuality => crate::graph::MAX_VERTICES,
            SuiteId::Lemma4 => limits::TWO_PERFECT,
            SuiteId::HoangMcdiarmid => limits::TWO_DIVISIBLE,
            SuiteId::Lemma6 | SuiteId::InclusionChain | SuiteId::Heredity => {
                limits::PERFECTLY_DIVISIBLE.min(limits::TWO_DIVISIBLE)
            }
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSpec {
    pub suite: SuiteId,
    pub n_max: usize,
    /// Replaces the built-in enumeration, e.g. with a graph6 file.
    pub source: Option<Source>,
}

impl SuiteSpec {
    pub fn new(suite: SuiteId, n_max: usize) -> Self {
        SuiteSpec {
            suite,
            n_max,
            source: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            return Err(Error::InvalidArgument("n_max must be at least 1".into()));
        }
        let builtin = matches!(self.source, None | Some(Source::Builtin));
        let cap = if builtin {
            self.suite.cap().min(BUILTIN_CAP)
        } else {
            self.suite.cap()
        };
        if self.n_max > cap {
            return Err(Error::SizeLimit {
                operation: self.suite.name(),
                n: self.n_max,
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Worker threads; `None` uses every available core.
    pub threads: Option<usize>,
    /// Keep every verdict produced during the run in
    /// [`SuiteResult::verdicts`] for external auditing.
    pub keep_verdicts: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Universe {
    pub n_max: usize,
    pub filter: Filter,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: SuiteId,
    pub tier: Tier,
    pub universe: Universe,
    pub graphs_tested: usize,
    pub certificates_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    pub certificate_failures: Vec<Counterexample>,
    pub elapsed_ms: u128,
    /// Verdicts retained when [`RunOptions::keep_verdicts`] is set, keyed by
    /// graph6 of the graph they were issued for (for the self-duality suite
    /// that includes complements).
    #[serde(skip)]
    pub verdicts: Vec<(String, ClassVerdict)>,
}

impl SuiteResult {
    /// Lemma suites pass with no counterexamples; conjecture suites pass as
    /// long as every finding is backed by re-validated certificates.
    pub fn passed(&self) -> bool {
        let findings_ok = match self.tier {
            Tier::Lemma => self.counterexamples.is_empty(),
            Tier::Conjecture => self
                .counterexamples
                .iter()
                .all(|c| c.detail["revalidated"] == Value::Bool(true)),
        };
        findings_ok && self.certificate_failures.is_empty()
    }
}

#[derive(Default)]
struct GraphOutcome {
    counterexample: Option<Counterexample>,
    certificate_failures: Vec<Counterexample>,
    certificates_checked: usize,
    /// Each verdict with the graph6 of the graph it was issued for.
    verdicts: Vec<(String, ClassVerdict)>,
}

impl GraphOutcome {
    fn record(&mut self, g: &Graph, v: ClassVerdict) -> bool {
        self.certificates_checked += 1;
        if let Err(msg) = validate(g, &v) {
            self.certificate_failures.push(Counterexample {
                graph6: write_graph6(g),
                detail: json!({"reason": format!("{} certificate rejected: {msg}", v.class), "verdict": v}),
            });
        }
        let holds = v.holds;
        self.verdicts.push((write_graph6(g), v));
        holds
    }

    fn fail(&mut self, g: &Graph, reason: String) {
        self.counterexample = Some(Counterexample {
            graph6: write_graph6(g),
            detail: json!({
                "reason": reason,
                "verdicts": self.verdicts.iter().map(|(g6, v)| json!({"graph6": g6, "verdict": v})).collect::<Vec<_>>(),
            }),
        });
    }
}

pub fn run_suite(spec: &SuiteSpec) -> Result<SuiteResult> {
    run_suite_with(spec, &RunOptions::default())
}

pub fn run_suite_with(spec: &SuiteSpec, opts: &RunOptions) -> Result<SuiteResult> {
    spec.validate()?;
    let started = Instant::now();
    let suite = spec.suite;
    let filter = suite.filter();
    let source = spec.source.clone().unwrap_or(Source::Builtin);

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = opts.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;

    let streams: Vec<EnumSpec> = match &source {
        Source::Builtin => (1..=spec.n_max)
            .map(|n| EnumSpec::builtin(n, filter))
            .collect(),
        Source::File(_) => vec![EnumSpec {
            n: spec.n_max,
            filter,
            source: source.clone(),
        }],
    };

    let mut result = SuiteResult {
        suite,
        tier: suite.tier(),
        universe: Universe {
            n_max: spec.n_max,
            filter,
            source: match &source {
                Source::Builtin => "builtin".into(),
                Source::File(p) => p.display().to_string(),
            },
        },
        graphs_tested: 0,
        certificates_checked: 0,
        counterexamples: Vec::new(),
        certificate_failures: Vec::new(),
        elapsed_ms: 0,
        verdicts: Vec::new(),
    };

    const CHUNK: usize = 2048;
    for es in streams {
        let mut stream = enumerate(&es)?;
        loop {
            let chunk: Vec<Graph> = stream.by_ref().take(CHUNK).collect::<Result<_>>()?;
            if chunk.is_empty() {
                break;
            }
            let outcomes: Vec<Result<GraphOutcome>> =
                pool.install(|| chunk.par_iter().map(|g| check_graph(suite, g)).collect());
            for item in outcomes {
                let o = item?;
                result.graphs_tested += 1;
                result.certificates_checked += o.certificates_checked;
                result.certificate_failures.extend(o.certificate_failures);
                result.counterexamples.extend(o.counterexample);
                if opts.keep_verdicts {
                    result.verdicts.extend(o.verdicts);
                }
            }
        }
    }

    if suite.tier() == Tier::Conjecture {
        for c in &mut result.counterexamples {
            let ok = revalidate_finding(suite, &c.graph6);
            c.detail["revalidated"] = Value::Bool(ok);
        }
    }
    let key = |c: &Counterexample| (c.graph6.len(), c.graph6.clone());
    result.counterexamples.sort_by_key(key);
    result.certificate_failures.sort_by_key(key);
    result.elapsed_ms = started.elapsed().as_millis();
    Ok(result)
}

fn check_graph(suite: SuiteId, g: &Graph) -> Result<GraphOutcome> {
    let mut o = GraphOutcome::default();
    match suite {
        SuiteId::Lemma3 => {
            let bipartite = g.is_bipartite().is_some();
            let by_definition = is_perfect_by_definition(g, &mut SubsetCache::new(g))?.is_none();
            let by_holes = is_perfect_by_spgt(g);
            let dispatched = o.record(g, is_perfect(g));
            if !(bipartite == by_definition && bipartite == by_holes && bipartite == dispatched) {
                o.fail(g, format!(
                    "bipartite={bipartite} perfect(definition)={by_definition} perfect(holes)={by_holes}"
                ));
            }
        }
        SuiteId::Lemma4 => {
            let four = is_k_colorable(g, 4).is_some();
            let searched = o.record(g, is_2perfect_search(g)?);
            let fast = o.record(g, is_2perfect(g)?);
            if !(four == searched && four == fast) {
                o.fail(
                    g,
                    format!(
                        "4-colorable={four} 2-perfect(search)={searched} 2-perfect(fast)={fast}"
                    ),
                );
            }
        }
        SuiteId::Lemma6 => {
            let mut cache = SubsetCache::new(g);
            let three = is_k_colorable(g, 3).is_some();
            let pd = o.record(g, is_perfectly_divisible(g, &mut cache)?);
            let sp = o.record(g, is_stable_perfect_search(g)?);
            let sp_fast = o.record(g, is_stable_perfect(g)?);
            let nice = o.record(g, is_nice(g, &mut cache)?);
            if ![pd, sp, sp_fast, nice].iter().all(|&x| x == three) {
                o.fail(g, format!(
                    "3-colorable={three} perfectly-divisible={pd} stable-perfect={sp} (fast path {sp_fast}) nice={nice}"
                ));
            }
        }
        SuiteId::InclusionChain => {
            let c = classification(g, &mut o)?;
            if let Some(msg) = inclusion_violation(&c) {
                o.fail(g, msg);
            }
        }
        SuiteId::HoangMcdiarmid => {
            let two_div = o.record(g, is_2divisible(g, &mut SubsetCache::new(g))?);
            let hole = find_odd_hole(g);
            if let Some(h) = &hole {
                o.record(
                    g,
                    ClassVerdict {
                        class: Class::Perfect,
                        holds: false,
                        certificate: Certificate::OddHole(h.vertices.clone()),
                        nodes_searched: 0,
                    },
                );
            }
            if two_div != hole.is_none() {
                o.fail(
                    g,
                    format!("2-divisible={two_div} odd-hole-free={}", hole.is_none()),
                );
            }
        }
        SuiteId::PerfectOracleEquivalence => {
            let by_definition = is_perfect_by_definition(g, &mut SubsetCache::new(g))?;
            let by_holes = is_perfect_by_spgt(g);
            let dispatched = o.record(g, is_perfect(g));
            if let Some(w) = &by_definition {
                o.record(
                    g,
                    ClassVerdict {
                        class: Class::Perfect,
                        holds: false,
                        certificate: Certificate::Obstruction {
                            vertices: w.subset,
                            chi: Some(w.chi),
                            omega: w.omega,
                        },
                        nodes_searched: 0,
                    },
                );
            }
            let def = by_definition.is_none();
            if !(def == by_holes && def == dispatched) {
                o.fail(g, format!(
                    "perfect(definition)={def} perfect(holes)={by_holes} perfect(dispatch)={dispatched}"
                ));
            }
        }
        SuiteId::SelfDuality => {
            let gc = g.complement();
            let here = o.record(g, is_perfect(g));
            let there = o.record(&gc, is_perfect(&gc));
            if here != there || is_perfect_by_spgt(g) != is_perfect_by_spgt(&gc) {
                o.fail(g, format!("perfect(G)={here} perfect(complement)={there}"));
            }
        }
        SuiteId::Heredity => {
            let c = classification(g, &mut o)?;
            'subsets: for s in SizeLexSubsets::starting_at(g.vertices(), 1) {
                if s == g.vertices() {
                    break;
                }
                let h = g.induced_subgraph(s);
                for v in classify(&h, &Class::ALL)? {
                    if c.holds(v.class) && !v.holds {
                        o.fail(g, format!("{} fails on induced subgraph {s}", v.class));
                        break 'subsets;
                    }
                }
            }
        }
    }
    Ok(o)
}

fn classification(g: &Graph, o: &mut GraphOutcome) -> Result<Classification> {
    let verdicts = classify(g, &Class::ALL)?;
    for v in &verdicts {
        o.record(g, v.clone());
    }
    Ok(Classification {
        graph6: write_graph6(g),
        n: g.order(),
        triangle_free: g.is_triangle_free(),
        bipartite: g.is_bipartite().is_some(),
        verdicts,
    })
}

// Re-derives a conjecture finding from its graph6 string alone.
fn revalidate_finding(suite: SuiteId, graph6: &str) -> bool {
    let Ok(g) = parse_graph6(graph6) else {
        return false;
    };
    match check_graph(suite, &g) {
        Ok(o) => o.counterexample.is_some() && o.certificate_failures.is_empty(),
        Err(_) => false,
    }
}

/// A minimal-obstruction query: graphs outside `class` (restricted to the
/// `filter` universe) all of whose proper induced subgraphs lie in `class`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalQuery {
    pub class: Class,
    pub filter: Filter,
}

impl FromStr for ExtremalQuery {
    type Err = Error;

    /// `minimal-imperfect` or `minimal-non-<class>`, optionally followed by
    /// `-triangle-free`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        let (body, filter) = match s.strip_suffix("-triangle-free") {
            Some(b) => (b, Filter::TriangleFree),
            None => (s.as_str(), Filter::All),
        };
        let class = if body == "minimal-imperfect" {
            Class::Perfect
        } else if let Some(c) = body.strip_prefix("minimal-non-") {
            c.parse()?
        } else {
            return Err(Error::InvalidArgument(format!(
                "unknown search predicate '{s}'"
            )));
        };
        Ok(ExtremalQuery { class, filter })
    }
}

/// All minimal obstructions for `query` on at most `n_max` vertices, in
/// enumeration order. Minimality uses heredity: deleting any one vertex
/// must land back in the class.
pub fn search_extremal(query: ExtremalQuery, n_max: usize) -> Result<Vec<Graph>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let cap = crate::classes::cap_for(query.class).min(BUILTIN_CAP);
    if n_max > cap {
        return Err(Error::SizeLimit {
            operation: "extremal search",
            n: n_max,
            cap,
        });
    }
    let in_class = |g: &Graph| classify(g, &[query.class]).map(|v| v[0].holds);
    let mut found = Vec::new();
    for n in 1..=n_max {
        let graphs: Vec<Graph> =
            enumerate(&EnumSpec::builtin(n, query.filter))?.collect::<Result<_>>()?;
        let hits: Vec<Result<Option<Graph>>> = graphs
            .par_iter()
            .map(|g| {
                if in_class(g)? {
                    return Ok(None);
                }
                for v in g.vertices() {
                    if !in_class(&g.induced_subgraph(g.vertices().without(v)))? {
                        return Ok(None);
                    }
                }
                Ok(Some(*g))
            })
            .collect();
        for h in hits {
            found.extend(h?);
        }
    }
    Ok(found)
}
