//! Command-line front end: argument parsing, report assembly and the
//! persistent coefficient cache.

pub mod cache;
pub mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use cherlink_core::cherednik::{
    ch_aq, hook_components_l, l_character, l_fractional_offset, torus_link_homfly, torus_link_numerator, CherednikParams,
};
use cherlink_core::dmod::{dmod_character_truncated, sl_label, DmodLabel};
use cherlink_core::knots::{
    partially_reduced, reduced, renormalize, rosso_jones, sl_n_specialize, symmetric_form, TorusKnot, fiber_value,
};
use cherlink_core::koszul::{dunkl_apply, koszul_homology, singular_polynomials};
use cherlink_core::symfunc::{c_coeffs, kostka_foulkes, lr_product, mn_character};
use cherlink_core::{LaurentAQ, Partition, Q, RationalAQ};

use cache::{Cache, Family};
use report::{Item, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Consistency(_) => 3,
        }
    }
}

impl From<cherlink_core::Error> for CliError {
    fn from(e: cherlink_core::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Consistency(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "cherlink", version, about = "Exact Cherednik characters, torus-knot HOMFLY invariants and Koszul homology")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads (default: all cores). Output does not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// JSON-lines cache for coefficient families.
    #[arg(long, env = "CHERLINK_CACHE", global = true)]
    pub cache: Option<PathBuf>,
    /// Default truncation order in powers of q.
    #[arg(long, default_value_t = 30, global = true)]
    pub order: i64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Colored HOMFLY invariant of a torus knot.
    Homfly(HomflyArgs),
    /// HOMFLY invariant of a torus link `T(m, n)` with `gcd(m, n) = d`.
    Link(LinkArgs),
    /// Character of the minimally supported module `L_{m/n}(n0·λ + λ')`.
    Char(CharArgs),
    /// Graded homology of the Koszul-BGG complex.
    Koszul(KoszulArgs),
    /// Truncated character of an equivariant D-module on the nilpotent cone of `sl_m`.
    Dmod(DmodArgs),
    /// Individual coefficient families (served from the cache when enabled).
    #[command(subcommand)]
    Coeffs(CoeffsCommand),
}

#[derive(Debug, Args)]
pub struct HomflyArgs {
    #[arg(long, value_parser = parse_pair)]
    pub torus: (usize, usize),
    #[arg(long, value_parser = parse_partition)]
    pub color: Partition,
    #[arg(long, group = "variant")]
    pub renormalized: bool,
    #[arg(long, group = "variant")]
    pub partially_reduced: bool,
    #[arg(long, group = "variant")]
    pub reduced: bool,
    /// Specialize `a = q^N` in the selected variant.
    #[arg(long)]
    pub sln: Option<i64>,
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    #[arg(long, value_parser = parse_pair)]
    pub torus: (usize, usize),
}

#[derive(Debug, Args)]
pub struct CharArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long, value_parser = parse_partition, default_value = "-")]
    pub lambda_prime: Partition,
    /// Conjugacy class of `S_n` by cycle type (default: identity).
    #[arg(long, value_parser = parse_partition)]
    pub class: Option<Partition>,
    /// Also emit the hook components `Σ a^k dim_q Hom(∧^k h, L)`.
    #[arg(long)]
    pub hooks: bool,
}

#[derive(Debug, Args)]
pub struct KoszulArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub max_qdeg: usize,
}

#[derive(Debug, Args)]
pub struct DmodArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long, value_parser = parse_partition)]
    pub orbit_lambda: Partition,
    #[arg(long)]
    pub k: usize,
    /// Truncation in powers of q (default: --order).
    #[arg(long)]
    pub trunc: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum CoeffsCommand {
    /// Littlewood-Richardson product `s_μ s_ν`.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// Kostka-Foulkes polynomial `K_{μ,w}(q)`.
    Kf {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        w: Partition,
    },
    /// Irreducible character `χ_λ` at cycle type `cls`.
    Mn {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        class: Partition,
    },
    /// Coefficients `c^ν` of `s_λ[p_{n0}]·s_{λ'}` in the Schur basis.
    C {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "-")]
        lambda_prime: Partition,
        #[arg(long)]
        n0: usize,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `m,n`, got `{s}`"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((p(a)?, p(b)?))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Parses, computes and renders; the cache is created from `--cache`.
pub fn run(cli: &Cli) -> (CliResult<String>, Vec<String>) {
    let mut cache = match &cli.cache {
        Some(p) => Cache::open(p),
        None => Cache::disabled(),
    };
    let out = execute(cli, &mut cache);
    (out, cache.warnings().to_vec())
}

/// Runs one command against an explicit cache.
pub fn execute(cli: &Cli, cache: &mut Cache) -> CliResult<String> {
    let report = match cli.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
            pool.install(|| dispatch(cli, cache))?
        }
        None => dispatch(cli, cache)?,
    };
    report.render(cli.format).ok_or_else(|| {
        CliError::Input(format!("`{}` has no LaTeX rendering; use --format json or text", report.command))
    })
}

fn dispatch(cli: &Cli, cache: &mut Cache) -> CliResult<Report> {
    match &cli.command {
        Command::Homfly(a) => cmd_homfly(a),
        Command::Link(a) => cmd_link(a),
        Command::Char(a) => cmd_char(a, cache),
        Command::Koszul(a) => cmd_koszul(a),
        Command::Dmod(a) => cmd_dmod(a, cli.order),
        Command::Coeffs(c) => cmd_coeffs(c, cache),
    }
}

fn half(e: i64) -> String {
    if e % 2 == 0 { (e / 2).to_string() } else { format!("{e}/2") }
}

fn cached_c_coeffs(cache: &mut Cache, lambda: &Partition, lp: &Partition, n0: usize) -> BTreeMap<Partition, i64> {
    let key = format!("{lambda}|{lp}|{n0}");
    cache.get_or_compute(Family::Ccoeff, &key, || Ok::<_, CliError>(c_coeffs(lambda, lp, n0))).expect("infallible")
}

fn cached_mn(cache: &mut Cache, lambda: &Partition, cls: &Partition) -> CliResult<i64> {
    let key = format!("{lambda}|{cls}");
    cache.get_or_compute(Family::Mnchar, &key, || Ok(mn_character(lambda, cls)?))
}

fn support_json(coeffs: &BTreeMap<Partition, i64>) -> Value {
    Value::Object(coeffs.iter().map(|(nu, c)| (nu.to_string(), json!(c))).collect())
}

fn cmd_homfly(a: &HomflyArgs) -> CliResult<Report> {
    let (m0, n0) = a.torus;
    let g = gcd(m0, n0);
    if m0 > 0 && n0 > 0 && g != 1 {
        return Err(CliError::Input(format!(
            "T({m0},{n0}) is a {g}-component link, not a knot; use the `link` subcommand"
        )));
    }
    let k = TorusKnot::new(m0, n0)?;
    let lambda = &a.color;
    if lambda.is_empty() {
        return Err(CliError::Input("the color must be a nonempty partition".into()));
    }
    let raw = rosso_jones(&k, lambda)?;
    let renorm = renormalize(&raw, lambda, &k)?;
    let p_hat = partially_reduced(&k, lambda)?;
    let fiber = fiber_value(&p_hat)?;
    let d = lambda.size() as i64;
    let (m0i, n0i) = (m0 as i64, n0 as i64);

    let mut r = Report::new(
        "homfly",
        json!({ "torus": [m0, n0], "color": lambda.to_string(), "sln": a.sln }),
        "Rosso-Jones cabling formula for torus knots",
    )
    .normalize("exponents of a and q are recorded doubled in exact output; a^{1/2}, q^{1/2} may occur")
    .normalize("unknot colored by λ: (q/a)^{|λ|/2} q^{n(λ)} Π(1 − a q^{c(x)}) / Π(1 − q^{h(x)})")
    .normalize(&format!(
        "renormalized = a^{{{}}} (q^{{-1/2}} − q^{{1/2}}) / (1 − a) · P",
        half(d * (m0i + n0i - m0i * n0i))
    ))
    .normalize(&format!(
        "m0↔n0 symmetric form = q^{{{}}} · renormalized",
        -m0i * n0i * lambda.kappa()
    ))
    .normalize("partially reduced = P · Π_{i=1}^{|λ|} (1 − q^i); fiber value at a = −1, q = 1 after normalizing the lowest a-power")
    .section("homfly", Item::Rational(raw.clone()))
    .section("renormalized", Item::Rational(renorm.clone()))
    .section("symmetric_form", Item::Rational(symmetric_form(&k, lambda)?))
    .section("partially_reduced", Item::Laurent(p_hat.clone()))
    .section("fiber_value", Item::Text(fiber.to_string()));

    let selected: (&str, RationalAQ) = if a.reduced {
        let red = reduced(&k, lambda)?;
        r = r.normalize("reduced = P(K) / P(unknot)").section("reduced", Item::Laurent(red.clone()));
        ("reduced", red.into())
    } else if a.partially_reduced {
        ("partially_reduced", p_hat.into())
    } else if a.renormalized {
        ("renormalized", renorm)
    } else {
        ("homfly", raw)
    };
    r = r.section("selected", Item::Text(selected.0.into()));
    if let Some(nn) = a.sln {
        r = r
            .normalize(&format!("sl_N specialization a = q^{nn} applied to the selected variant"))
            .section("sl_n", Item::Rational(sl_n_specialize(&selected.1, nn).normalized()));
    }
    Ok(r)
}

fn cmd_link(a: &LinkArgs) -> CliResult<Report> {
    let (m, n) = a.torus;
    let p = CherednikParams::new(m, n)?;
    let d = p.d();
    let total = torus_link_homfly(m, n)?;
    let numerator = torus_link_numerator(m, n)?;
    let mut rows = Vec::new();
    let mut constituents = serde_json::Map::new();
    for lambda in Partition::all(d) {
        let ch = ch_aq(&hook_components_l(&p, &lambda)?)?;
        rows.push(vec![lambda.to_string(), lambda.dim().to_string(), ch.to_string()]);
        constituents.insert(
            lambda.to_string(),
            json!({ "dim": lambda.dim().to_string(), "display": ch.to_string(), "exact": ch.to_json() }),
        );
    }
    let nonneg = numerator.nonneg_coeffs();
    Ok(Report::new(
        "link",
        json!({ "torus": [m, n] }),
        "torus link HOMFLY as Σ_{|λ|=d} dim π_λ · Σ_k a^k dim_q Hom(∧^k h, L_{m/n}(n0λ))",
    )
    .normalize(&format!("d = gcd(m, n) = {d}, n0 = {}", p.n0))
    .normalize(&format!("numerator = P · Π_{{i=2}}^{{{d}}} (1 − q^i)"))
    .section("homfly", Item::Rational(total))
    .section("constituents", Item::Json(Value::Object(constituents)))
    .section(
        "constituent_table",
        Item::Table { header: vec!["λ".into(), "dim".into(), "ch_aq".into()], rows },
    )
    .section("numerator", Item::Laurent(numerator))
    .section("numerator_nonnegative", Item::Json(json!(nonneg))))
}

fn cmd_char(a: &CharArgs, cache: &mut Cache) -> CliResult<Report> {
    let p = CherednikParams::new(a.m, a.n)?;
    p.check_label(&a.lambda, &a.lambda_prime)?;
    let cls = a.class.clone().unwrap_or_else(|| Partition::column(a.n));
    if cls.size() != a.n {
        return Err(CliError::Input(format!("class {cls} is not a cycle type of S_{}", a.n)));
    }
    let support = cached_c_coeffs(cache, &a.lambda, &a.lambda_prime, p.n0);
    let mut chis = serde_json::Map::new();
    for nu in support.keys() {
        chis.insert(nu.to_string(), json!(cached_mn(cache, nu, &cls)?));
    }
    let offset = l_fractional_offset(&p, &a.lambda, &a.lambda_prime)?;
    let ch = l_character(&p, &a.lambda, &a.lambda_prime, &cls)?;
    let mut r = Report::new(
        "char",
        json!({
            "n": a.n, "m": a.m, "lambda": a.lambda.to_string(),
            "lambda_prime": a.lambda_prime.to_string(), "class": cls.to_string(),
        }),
        "Tr_L(σ q^h) = Σ_ν c^ν Tr_{M(ν)}(σ q^h) with c^ν the Schur coefficients of s_λ[p_{n0}]·s_{λ'}",
    )
    .normalize(&format!("c = {}, n0 = {}", p.c(), p.n0))
    .normalize(&format!("q tracks h; the fractional offset q^{{{}}} is removed", offset / Q::from_integer(2.into())))
    .section("support", Item::Json(support_json(&support)))
    .section("support_characters_at_class", Item::Json(Value::Object(chis)))
    .section("character", Item::Rational(ch));
    if a.hooks {
        if !a.lambda_prime.is_empty() {
            return Err(CliError::Input("--hooks requires λ' = ∅".into()));
        }
        let hooks = hook_components_l(&p, &a.lambda)?;
        let k = TorusKnot::new(p.m0, p.n0)?;
        let knot = symmetric_form(&k, &a.lambda)?;
        if !hooks.equals(&knot) {
            return Err(CliError::Consistency(format!(
                "hook components of L_{}({}·{}) differ from the renormalized {k} invariant",
                p.c(),
                p.n0,
                a.lambda
            )));
        }
        r = r
            .normalize("hooks = Σ_k (−a)^k dim_q Hom(∧^k h, L); hooks_aq uses a^k")
            .normalize(&format!(
                "hooks equal q^{{{}}} times the renormalized colored HOMFLY of {k}",
                -((p.m0 * p.n0) as i64) * a.lambda.kappa()
            ))
            .section("hooks_aq", Item::Rational(ch_aq(&hooks)?))
            .section("hooks", Item::Rational(hooks));
    }
    Ok(r)
}

fn isotypic_string(iso: &BTreeMap<Partition, i64>) -> String {
    if iso.is_empty() {
        return "0".into();
    }
    iso.iter()
        .map(|(mu, k)| if *k == 1 { format!("({mu})") } else { format!("{k}({mu})") })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn cmd_koszul(a: &KoszulArgs) -> CliResult<Report> {
    let (m, n) = (a.m, a.n);
    if m == 0 || n < 2 {
        return Err(CliError::Input("need m ≥ 1 and n ≥ 2".into()));
    }
    if m % n == 0 {
        return Err(CliError::Input(format!("n = {n} divides m = {m}; the singular copy of h degenerates")));
    }
    let h = koszul_homology(m, n, a.max_qdeg)?;
    let c = Q::new((m as i64).into(), (n as i64).into());
    let singular = singular_polynomials(m, n)?
        .iter()
        .all(|f| (0..n).all(|i| dunkl_apply(&c, i, f).map(|g| g.is_zero()).unwrap_or(false)));
    let matches = h.matches_l_characters()?;
    let euler = h.euler_matches_verma()?;
    for (ok, what) in [(singular, "Dunkl singularity"), (matches, "H_i = L(n0(d−i,1^i))"), (euler, "Euler characteristic")] {
        if !ok {
            return Err(CliError::Consistency(format!("Koszul complex ({m},{n}): {what} check failed")));
        }
    }
    let mut rows = Vec::new();
    for pc in &h.pieces {
        if pc.dim == 0 {
            continue;
        }
        let w = h.base_weights[pc.i] + 2 * pc.j as i64;
        rows.push(vec![
            pc.i.to_string(),
            pc.j.to_string(),
            half(w),
            pc.dim.to_string(),
            isotypic_string(&h.isotypic(pc.i, pc.j)),
        ]);
    }
    rows.sort_by_key(|r| (r[0].parse::<usize>().unwrap_or(0), r[1].parse::<usize>().unwrap_or(0)));
    let nonzero: Vec<usize> = (0..=h.top_degree()).filter(|&i| !h.vanishes(i)).collect();
    Ok(Report::new(
        "koszul",
        json!({ "m": m, "n": n, "max_qdeg": a.max_qdeg }),
        "Koszul-BGG complex of the degree-m singular copy of h; H_i = L_{m/n}(n0(d−i,1^i)) for i < d",
    )
    .normalize("degree = polynomial degree in x_1..x_{n−1} (x_n eliminated by translation)")
    .normalize("h-weight of C_{i,j} = (n−1)(1−m)/2 + m·i + j")
    .section(
        "homology",
        Item::Table {
            header: vec!["i".into(), "degree".into(), "h-weight".into(), "dim".into(), "isotypic".into()],
            rows,
        },
    )
    .section("nonzero_degrees", Item::Json(json!(nonzero)))
    .section(
        "checks",
        Item::Json(json!({ "dunkl_singular": singular, "matches_l_characters": matches, "euler_matches_verma": euler })),
    ))
}

fn cmd_dmod(a: &DmodArgs, order: i64) -> CliResult<Report> {
    let label = DmodLabel::new(a.m, a.s, a.orbit_lambda.clone())?;
    let trunc = a.trunc.unwrap_or(order);
    if trunc < 0 {
        return Err(CliError::Input("truncation must be nonnegative".into()));
    }
    let n = label.level(a.k)?;
    let ch = dmod_character_truncated(&label, a.k, trunc)?;
    let rows: Vec<Vec<String>> = ch
        .coeffs
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(mu, c)| vec![sl_label(mu, a.m).to_string(), mu.to_string(), c.to_string()])
        .collect();
    let p = label.params(a.k)?;
    Ok(Report::new(
        "dmod",
        json!({ "m": a.m, "s": a.s, "orbit_lambda": a.orbit_lambda.to_string(), "k": a.k, "trunc": trunc }),
        "multiplicity of V_μ in M^(n) = π_μ-isotypic part of L_{m/n}(n0λ), n = s + km",
    )
    .normalize(&format!("orbit = {}, n = {n}, c = {}", label.orbit(), p.c()))
    .normalize(&format!("series truncated at q^{trunc}"))
    .section(
        "character",
        Item::Table { header: vec!["sl_label".into(), "gl_label".into(), "series".into()], rows },
    )
    .section("nonnegative", Item::Json(json!(ch.nonneg()))))
}

fn cmd_coeffs(c: &CoeffsCommand, cache: &mut Cache) -> CliResult<Report> {
    match c {
        CoeffsCommand::Lr { mu, nu } => {
            let key = format!("{mu}|{nu}");
            let t: BTreeMap<Partition, u64> =
                cache.get_or_compute(Family::Lr, &key, || Ok::<_, CliError>(lr_product(mu, nu)))?;
            let v = Value::Object(t.iter().map(|(l, c)| (l.to_string(), json!(c))).collect());
            Ok(Report::new("coeffs lr", json!({ "mu": mu.to_string(), "nu": nu.to_string() }), "Littlewood-Richardson rule")
                .section("product", Item::Json(v)))
        }
        CoeffsCommand::Kf { mu, w } => {
            let key = format!("{mu}|{w}");
            let v: Value = cache.get_or_compute(Family::Kf, &key, || {
                Ok::<_, CliError>(RationalAQ::from_poly(kostka_foulkes(mu, w)?).to_json())
            })?;
            let k: LaurentAQ = RationalAQ::from_json(&v)?.to_polynomial()?;
            Ok(Report::new("coeffs kf", json!({ "mu": mu.to_string(), "w": w.to_string() }), "charge statistic on SSYT")
                .normalize("q exponents doubled in exact output")
                .section("kostka_foulkes", Item::Laurent(k)))
        }
        CoeffsCommand::Mn { lambda, class } => {
            let x = cached_mn(cache, lambda, class)?;
            Ok(Report::new(
                "coeffs mn",
                json!({ "lambda": lambda.to_string(), "class": class.to_string() }),
                "Murnaghan-Nakayama rule",
            )
            .section("character", Item::Json(json!(x))))
        }
        CoeffsCommand::C { lambda, lambda_prime, n0 } => {
            if *n0 == 0 {
                return Err(CliError::Input("n0 must be positive".into()));
            }
            let t = cached_c_coeffs(cache, lambda, lambda_prime, *n0);
            Ok(Report::new(
                "coeffs c",
                json!({ "lambda": lambda.to_string(), "lambda_prime": lambda_prime.to_string(), "n0": n0 }),
                "Schur expansion of the plethysm s_λ[p_{n0}] times s_{λ'}",
            )
            .section("coefficients", Item::Json(support_json(&t))))
        }
    }
}
