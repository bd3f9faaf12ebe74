//! `catalan`: enumerate and inspect the Catalan simplicial set, run the
//! verification suites, classify maps into monoidal nerves and check skew
//! monoidal data.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use catalan_core::classify::{classification_summary, classify_maps, CLASSIFY_DIM};
use catalan_core::dyck::{enumerate_dyck, enumerate_nondegenerate, DyckWord};
use catalan_core::io::{parse_skew, parse_structure, SCHEMA_VERSION};
use catalan_core::motzkin::{dyck_to_motzkin, enumerate_motzkin, motzkin_to_dyck, MotzkinWord};
use catalan_core::nerve::{monoidal_nerve, NerveError, MAX_NERVE_DIM};
use catalan_core::numbers::{catalan_number, motzkin_numbers, verify_binomial_identity};
use catalan_core::relation::{enumerate_k_relations, to_relation};
use catalan_core::skew::{
    check_axioms, check_naturality, check_pentagons, sweep, verify_equivalence, PentagonReport, SkewCarrier,
    SkewError, SweepSummary,
};
use catalan_core::sset::{catalan_sset, check_simplicial_identities, coskeletal_report, isomorphisms, SsetError};
use catalan_core::{category::library, Count};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "catalan", version, about = "Finite models of the Catalan simplicial set")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// TOML file overriding the dimension caps and the sweep budget.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the simplices of one dimension, sorted.
    Enumerate {
        #[arg(long)]
        dim: usize,
        /// Only non-degenerate simplices.
        #[arg(long)]
        nondegenerate: bool,
        /// Presentation of each simplex. Motzkin words exist only for
        /// non-degenerate simplices, so `motzkin` implies `--nondegenerate`.
        #[arg(long = "as", value_enum, default_value_t = Presentation::Dyck)]
        presentation: Presentation,
    },
    /// The face `d_i` of a Dyck word.
    Face { word: String, index: usize },
    /// The degeneracy `s_i` of a Dyck word.
    Degeneracy { word: String, index: usize },
    /// Eilenberg-Zilber decomposition of a Dyck word.
    Decompose { word: String },
    /// Motzkin word of a non-degenerate Dyck word, or back with `--inverse`.
    Motzkin {
        word: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest `n` for the binomial identity.
        #[arg(long)]
        max_n: Option<usize>,
        /// Coskeletality degree to test.
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Largest dimension for the dimension-bounded suites.
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Classify the maps from the Catalan set into the nerve of a structure.
    Classify { file: PathBuf },
    /// Skew monoidal checks.
    Skew {
        #[command(subcommand)]
        action: SkewAction,
    },
}

#[derive(Subcommand)]
enum SkewAction {
    /// Check the axioms and the nine pentagon conditions on one datum.
    Check { file: PathBuf },
    /// Enumerate every natural datum on a small carrier.
    Sweep {
        #[arg(long, value_enum)]
        carrier: Carrier,
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Presentation {
    Dyck,
    Relation,
    Motzkin,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Suite {
    Identities,
    Coskeletal,
    NerveIso,
    Motzkin,
    Binomial,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Carrier {
    Chain2,
    Chain3,
    OneZ,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct Caps {
    dyck: usize,
    relation: usize,
    identities: usize,
    coskeletal: usize,
    nerve: usize,
    motzkin: usize,
    binomial: usize,
    sweep_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            dyck: 10,
            relation: 7,
            identities: 8,
            coskeletal: 7,
            nerve: MAX_NERVE_DIM,
            motzkin: 10,
            binomial: 200,
            sweep_budget: catalan_core::skew::DEFAULT_SWEEP_BUDGET,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct Config {
    caps: Caps,
}

/// Why a command did not succeed; each maps to one exit status.
#[derive(Debug)]
enum Failure {
    /// A mathematical check came out false. The report is already printed.
    False,
    Input(anyhow::Error),
    Budget(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

fn budget(message: String) -> Failure {
    Failure::Budget(anyhow!(message))
}

fn within(what: &str, value: usize, cap: usize) -> Outcome {
    if value > cap {
        return Err(budget(format!("{what} {value} exceeds the cap {cap}")));
    }
    Ok(())
}

fn verdict(pass: bool) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Failure::False)
    }
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

fn parse_word(word: &str) -> anyhow::Result<DyckWord> {
    word.parse().with_context(|| format!("cannot read {word:?} as a Dyck word"))
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_config(path: Option<&Path>) -> anyhow::Result<Config> {
    match path {
        None => Ok(Config::default()),
        Some(p) => toml::from_str(&read(p)?).with_context(|| format!("invalid config {}", p.display())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = load_config(cli.config.as_deref()).map_err(Failure::Input).and_then(|config| run(&cli, &config.caps));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::False) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(e)) => {
            eprintln!("budget exceeded: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli, caps: &Caps) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Enumerate { dim, nondegenerate, presentation } => enumerate(*dim, *nondegenerate, *presentation, caps, json),
        Command::Face { word, index } => operator("face", word, *index, json),
        Command::Degeneracy { word, index } => operator("degeneracy", word, *index, json),
        Command::Decompose { word } => decompose(word, json),
        Command::Motzkin { word, inverse } => motzkin(word, *inverse, json),
        Command::Verify { suite, max_n, r, max_dim } => verify(*suite, *max_n, *r, *max_dim, caps, json),
        Command::Classify { file } => classify(file, json),
        Command::Skew { action: SkewAction::Check { file } } => skew_check(file, json),
        Command::Skew { action: SkewAction::Sweep { carrier, budget } } => {
            skew_sweep(*carrier, budget.unwrap_or(caps.sweep_budget), json)
        }
    }
}

#[derive(Serialize)]
struct Listing {
    schema_version: u32,
    command: &'static str,
    dim: usize,
    nondegenerate: bool,
    presentation: Presentation,
    count: usize,
    items: Vec<String>,
}

fn enumerate(dim: usize, nondegenerate: bool, presentation: Presentation, caps: &Caps, json: bool) -> Outcome {
    let nondegenerate = nondegenerate || presentation == Presentation::Motzkin;
    let mut items: Vec<String> = match presentation {
        Presentation::Dyck => {
            within("dimension", dim, caps.dyck)?;
            let words = if nondegenerate { enumerate_nondegenerate(dim) } else { enumerate_dyck(dim) };
            words.iter().map(DyckWord::to_string).collect()
        }
        Presentation::Relation => {
            within("dimension", dim, caps.relation)?;
            if nondegenerate {
                enumerate_nondegenerate(dim).iter().map(|w| to_relation(w).to_string()).collect()
            } else {
                enumerate_k_relations(dim).iter().map(|r| r.to_string()).collect()
            }
        }
        Presentation::Motzkin => {
            within("dimension", dim, caps.dyck)?;
            enumerate_motzkin(dim).iter().map(MotzkinWord::to_string).collect()
        }
    };
    items.sort();
    let listing = Listing {
        schema_version: SCHEMA_VERSION,
        command: "enumerate",
        dim,
        nondegenerate,
        presentation,
        count: items.len(),
        items,
    };
    if json {
        emit(&listing);
    } else {
        for item in &listing.items {
            println!("{item}");
        }
        println!("count: {}", listing.count);
    }
    Ok(())
}

#[derive(Serialize)]
struct OperatorResult<'a> {
    schema_version: u32,
    command: &'a str,
    word: String,
    index: usize,
    result: String,
}

fn operator(kind: &'static str, word: &str, index: usize, json: bool) -> Outcome {
    let w = parse_word(word)?;
    let out = if kind == "face" { w.face(index) } else { w.degeneracy(index) };
    let out = out.map_err(|e| anyhow!("{kind} {index} of {w}: {e}"))?;
    if json {
        emit(&OperatorResult { schema_version: SCHEMA_VERSION, command: kind, word: w.to_string(), index, result: out.to_string() });
    } else {
        println!("{out}");
    }
    Ok(())
}

#[derive(Serialize)]
struct Decomposition {
    schema_version: u32,
    command: &'static str,
    word: String,
    dim: usize,
    degenerate: bool,
    surjection: Vec<usize>,
    base: String,
    base_dim: usize,
}

fn decompose(word: &str, json: bool) -> Outcome {
    let w = parse_word(word)?;
    let (phi, base) = w.ez_decompose();
    let d = Decomposition {
        schema_version: SCHEMA_VERSION,
        command: "decompose",
        word: w.to_string(),
        dim: w.dim(),
        degenerate: w.is_degenerate(),
        surjection: phi.image().to_vec(),
        base: base.to_string(),
        base_dim: base.dim(),
    };
    if json {
        emit(&d);
    } else {
        let image: Vec<String> = d.surjection.iter().map(usize::to_string).collect();
        println!("{} = [{}]^* {} (non-degenerate, dimension {})", d.word, image.join(","), d.base, d.base_dim);
    }
    Ok(())
}

#[derive(Serialize)]
struct Translation {
    schema_version: u32,
    command: &'static str,
    dyck: String,
    motzkin: String,
}

fn motzkin(word: &str, inverse: bool, json: bool) -> Outcome {
    let (dyck, m) = if inverse {
        let m: MotzkinWord = word.parse().with_context(|| format!("cannot read {word:?} as a Motzkin word"))?;
        (motzkin_to_dyck(&m), m)
    } else {
        let w = parse_word(word)?;
        let m = dyck_to_motzkin(&w).with_context(|| format!("{w} has no Motzkin word"))?;
        (w, m)
    };
    let t = Translation { schema_version: SCHEMA_VERSION, command: "motzkin", dyck: dyck.to_string(), motzkin: m.to_string() };
    if json {
        emit(&t);
    } else if inverse {
        println!("{}", t.dyck);
    } else {
        println!("{}", t.motzkin);
    }
    Ok(())
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct SuiteReport {
    suite: Suite,
    pass: bool,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    command: &'static str,
    pass: bool,
    suites: Vec<SuiteReport>,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

/// Bounds for one verify invocation, already checked against the caps.
#[derive(Clone, Copy)]
struct Bounds {
    identities: usize,
    coskeletal: usize,
    r: usize,
    nerve: usize,
    motzkin: usize,
    binomial: usize,
}

fn verify(suite: Suite, max_n: Option<usize>, r: usize, max_dim: Option<usize>, caps: &Caps, json: bool) -> Outcome {
    let bounds = Bounds {
        identities: max_dim.unwrap_or(7),
        coskeletal: max_dim.unwrap_or(6),
        r,
        nerve: max_dim.unwrap_or(4),
        motzkin: max_dim.unwrap_or(7),
        binomial: max_n.unwrap_or(12),
    };
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![Suite::Identities, Suite::Coskeletal, Suite::NerveIso, Suite::Motzkin, Suite::Binomial],
        s => vec![s],
    };
    for s in &suites {
        match s {
            Suite::Identities => within("identities dimension", bounds.identities, caps.identities)?,
            Suite::Coskeletal => within("coskeletal dimension", bounds.coskeletal, caps.coskeletal)?,
            Suite::NerveIso => within("nerve dimension", bounds.nerve, caps.nerve)?,
            Suite::Motzkin => within("motzkin dimension", bounds.motzkin, caps.motzkin)?,
            Suite::Binomial => within("binomial n", bounds.binomial, caps.binomial)?,
            Suite::All => unreachable!(),
        }
    }
    if suites.contains(&Suite::Coskeletal) && bounds.r >= bounds.coskeletal {
        return Err(anyhow!("--r {} must be below --max-dim {}", bounds.r, bounds.coskeletal).into());
    }

    // suites run concurrently; the report keeps the fixed suite order
    let results: Vec<Result<SuiteReport, Failure>> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_suite(s, bounds))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut reports = Vec::new();
    for r in results {
        reports.push(r?);
    }
    let report = VerifyReport {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        pass: reports.iter().all(|s| s.pass),
        suites: reports,
    };
    if json {
        emit(&report);
    } else {
        for s in &report.suites {
            let name = serde_json::to_value(s.suite).expect("suite name");
            println!("suite {}: {}", name.as_str().unwrap_or_default(), if s.pass { "pass" } else { "FAIL" });
            for c in &s.checks {
                println!("  [{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
            }
        }
        println!("overall: {}", if report.pass { "pass" } else { "FAIL" });
    }
    verdict(report.pass)
}

fn sset_failure(e: SsetError) -> Failure {
    match e {
        SsetError::Budget { .. } => Failure::Budget(e.into()),
        other => Failure::Input(other.into()),
    }
}

fn nerve_failure(e: NerveError) -> Failure {
    match e {
        NerveError::Sset(inner) => sset_failure(inner),
        NerveError::TooDeep(_) => Failure::Budget(e.into()),
        other => Failure::Input(other.into()),
    }
}

fn run_suite(suite: Suite, b: Bounds) -> Result<SuiteReport, Failure> {
    let checks = match suite {
        Suite::Identities => {
            let c = catalan_sset(b.identities);
            let v = check_simplicial_identities(&c);
            let sizes: Vec<String> = c.level_sizes().iter().map(usize::to_string).collect();
            vec![
                check(
                    format!("simplicial identities up to dimension {}", b.identities),
                    v.is_empty(),
                    format!("{} violations", v.len()),
                ),
                check(
                    "level sizes are Catalan numbers",
                    (0..=b.identities).all(|n| Count::from(c.level(n).len()) == catalan_number::<Count>(n + 1)),
                    sizes.join(" "),
                ),
            ]
        }
        Suite::Coskeletal => {
            let c = catalan_sset(b.coskeletal);
            let report = coskeletal_report(&c, b.r, b.coskeletal, None).map_err(sset_failure)?;
            let detail = match &report.counterexample {
                None => {
                    let counts: Vec<String> = report.checked.iter().map(|(n, k)| format!("{k} in dim {n}")).collect();
                    format!("every boundary has one filler ({})", counts.join(", "))
                }
                Some((boundary, count)) => {
                    let n = boundary.dim();
                    let faces: Vec<&str> = boundary.facets().iter().map(|&x| c.label(n - 1, x)).collect();
                    format!("boundary ({}) has {count} fillers", faces.join(", "))
                }
            };
            vec![check(format!("{}-coskeletal up to dimension {}", b.r, b.coskeletal), report.holds, detail)]
        }
        Suite::NerveIso => {
            let c = catalan_sset(b.nerve);
            let nerve = monoidal_nerve(&library::two_or(), b.nerve).map_err(nerve_failure)?;
            let isos = isomorphisms(&c, nerve.sset());
            let mut checks = vec![check(
                format!("isomorphisms onto the nerve of (2, or) up to dimension {}", b.nerve),
                isos.len() == 1,
                format!("{} isomorphism{} found", isos.len(), if isos.len() == 1 { "" } else { "s" }),
            )];
            if let [f] = isos.as_slice() {
                let edge = |w: &str| c.find(1, w).map(|x| nerve.sset().label(1, f.image(1, x)).to_string());
                let (e, cc) = (edge("UUDD"), edge("UDUD"));
                checks.push(check(
                    "edges map to bot and top",
                    e.as_deref() == Some("bot") && cc.as_deref() == Some("top"),
                    format!("UUDD -> {}, UDUD -> {}", e.unwrap_or_default(), cc.unwrap_or_default()),
                ));
            }
            checks
        }
        Suite::Motzkin => {
            let m = motzkin_numbers::<Count>(b.motzkin + 1);
            let mut counts = Vec::new();
            let mut counted = true;
            let mut bijective = true;
            for (n, expected) in m.iter().enumerate() {
                let nd = enumerate_nondegenerate(n);
                counts.push(nd.len().to_string());
                counted &= Count::from(nd.len()) == *expected;
                bijective &= nd.iter().all(|w| dyck_to_motzkin(w).is_ok_and(|x| &motzkin_to_dyck(&x) == w));
                bijective &= enumerate_motzkin(n).len() == nd.len();
            }
            vec![
                check(format!("non-degenerate counts up to dimension {}", b.motzkin), counted, counts.join(" ")),
                check("Motzkin bijection round trips", bijective, format!("dimensions 0..={}", b.motzkin)),
            ]
        }
        Suite::Binomial => {
            let failures: Vec<String> =
                (0..=b.binomial).filter(|&n| !verify_binomial_identity::<Count>(n)).map(|n| n.to_string()).collect();
            let detail = if failures.is_empty() {
                format!("exact for n = 0..={}", b.binomial)
            } else {
                format!("fails at n = {}", failures.join(", "))
            };
            vec![check("C(n+1) = sum_k binom(n,k) M(k)", failures.is_empty(), detail)]
        }
        Suite::All => unreachable!(),
    };
    Ok(SuiteReport { suite, pass: checks.iter().all(|c| c.pass), checks })
}

#[derive(Serialize)]
struct RecordOut {
    carrier: String,
    mu: String,
    eta: String,
    eta_prime: String,
    /// `(word, image)` for every simplex of the source, by dimension.
    map: Vec<Vec<(String, String)>>,
}

#[derive(Serialize)]
struct ClassifyReport {
    schema_version: u32,
    command: &'static str,
    name: Option<String>,
    records: usize,
    maps: usize,
    monoids: usize,
    agree: bool,
    listing: Vec<RecordOut>,
}

fn classify(file: &Path, json: bool) -> Outcome {
    let loaded = parse_structure(&read(file)?).with_context(|| format!("{}", file.display()))?;
    let m = &loaded.structure;
    let class_err = |e: catalan_core::classify::ClassifyError| match e {
        catalan_core::classify::ClassifyError::Nerve(n) => nerve_failure(n),
        catalan_core::classify::ClassifyError::Sset(s) => sset_failure(s),
        other => Failure::Input(other.into()),
    };
    let summary = classification_summary(m).map_err(class_err)?;
    let records = classify_maps(m).map_err(class_err)?;
    let source = catalan_sset(CLASSIFY_DIM);
    let nerve = monoidal_nerve(m, CLASSIFY_DIM).map_err(nerve_failure)?;
    let base = m.base();
    let listing: Vec<RecordOut> = records
        .iter()
        .map(|r| RecordOut {
            carrier: base.object_label(r.monoid.carrier).to_string(),
            mu: base.morphism_label(r.monoid.mu).to_string(),
            eta: base.morphism_label(r.monoid.eta).to_string(),
            eta_prime: base.morphism_label(r.eta_prime).to_string(),
            map: (0..=CLASSIFY_DIM)
                .map(|n| {
                    (0..source.level(n).len())
                        .map(|x| (source.label(n, x).to_string(), nerve.sset().label(n, r.map.image(n, x)).to_string()))
                        .collect()
                })
                .collect(),
        })
        .collect();
    let report = ClassifyReport {
        schema_version: SCHEMA_VERSION,
        command: "classify",
        name: loaded.name,
        records: summary.records,
        maps: summary.maps,
        monoids: summary.monoids,
        agree: summary.agree,
        listing,
    };
    if json {
        emit(&report);
    } else {
        for r in &report.listing {
            println!("A = {}  mu = {}  eta = {}", r.carrier, r.mu, r.eta);
        }
        println!(
            "records: {}, maps: {}, monoids: {}, agreement: {}",
            report.records, report.maps, report.monoids, report.agree
        );
    }
    verdict(report.agree)
}

#[derive(Serialize)]
struct SkewReport {
    schema_version: u32,
    command: &'static str,
    name: Option<String>,
    natural: bool,
    naturality_failures: Vec<catalan_core::category::Violation>,
    kappa_is_identity: bool,
    axioms: PentagonReport,
    pentagons: PentagonReport,
    equivalence: bool,
}

fn skew_failure(e: SkewError) -> Failure {
    match e {
        SkewError::Budget { .. } => Failure::Budget(e.into()),
        other => Failure::Input(other.into()),
    }
}

fn skew_check(file: &Path, json: bool) -> Outcome {
    let loaded = parse_skew(&read(file)?).with_context(|| format!("{}", file.display()))?;
    let d = &loaded.data;
    let naturality = check_naturality(d).map_err(skew_failure)?;
    let axioms = check_axioms(d);
    let pentagons = check_pentagons(d);
    let report = SkewReport {
        schema_version: SCHEMA_VERSION,
        command: "skew-check",
        name: loaded.name,
        natural: naturality.is_empty(),
        naturality_failures: naturality,
        kappa_is_identity: d.kappa_is_identity(),
        equivalence: verify_equivalence(d),
        axioms,
        pentagons,
    };
    if json {
        emit(&report);
    } else {
        for v in &report.naturality_failures {
            println!("[FAIL] naturality: {v}");
        }
        for o in report.axioms.outcomes.iter().chain(&report.pentagons.outcomes) {
            let mut line = format!("[{}] {}", if o.holds { "pass" } else { "FAIL" }, o.condition);
            if let Some(w) = o.witness.as_ref().filter(|w| !w.is_empty()) {
                line += &format!("  at ({})", w.join(", "));
            }
            if let Some([u, l]) = &o.composites {
                let show = |x: &Option<String>| x.clone().unwrap_or_else(|| "not composable".into());
                line += &format!(": {} != {}", show(u), show(l));
            }
            println!("{line}");
        }
        println!("kappa is identity: {}", report.kappa_is_identity);
        println!("axioms and kappa = 1 <=> all pentagons: {}", report.equivalence);
    }
    verdict(report.natural && report.axioms.all_hold() && report.pentagons.all_hold() && report.equivalence)
}

#[derive(Serialize)]
struct SweepReport {
    schema_version: u32,
    command: &'static str,
    carrier: &'static str,
    summary: SweepSummary,
    pass: bool,
}

fn skew_sweep(carrier: Carrier, limit: usize, json: bool) -> Outcome {
    let (name, c) = match carrier {
        Carrier::Chain2 => ("chain2", SkewCarrier::chain(2)),
        Carrier::Chain3 => ("chain3", SkewCarrier::chain(3)),
        Carrier::OneZ => ("one-z", SkewCarrier::Category(library::one_z_category())),
    };
    let summary = sweep(&c, limit).map_err(skew_failure)?;
    let report = SweepReport { schema_version: SCHEMA_VERSION, command: "skew-sweep", carrier: name, pass: summary.all_hold(), summary };
    if json {
        emit(&report);
    } else {
        let s = &report.summary;
        println!("carrier: {name}");
        println!("natural candidates: {}", s.candidates);
        println!("skew monoidal: {}", s.skew_monoidal);
        println!("monoidal: {}", s.monoidal);
        println!("equivalence holds for every candidate: {}", s.equivalence_holds);
        println!("A5 forces kappa = 1: {}", s.a5_forces_identity_kappa);
        println!("A8 and A9 hold when kappa = 1: {}", s.a8_a9_hold_for_identity_kappa);
        println!("monoidal structures are skew monoidal: {}", s.monoidal_are_skew_monoidal);
    }
    verdict(report.pass)
}
