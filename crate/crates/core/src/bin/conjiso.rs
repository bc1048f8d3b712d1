//! Command-line front-end: tables, boundary queries, minimization, and
//! verification suites.
//!
//! Exit codes: 0 success, 2 usage, 3 malformed input, 4 parameter out of
//! range, 5 verification failure or cross-method disagreement.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use conjiso::bounds::{
    factorial_tail_check, jensen_chain_check, weight_lemma_lhs, isoperimetry_ratio_sweep, solve_k, solve_k_with_m,
    solve_kappa, w_bound_ingredients,
};
use conjiso::characters::{
    character_table, chi_via_determinantal, xi_bruteforce, xi_on_class,
};
use conjiso::counting::{
    class_size, cycle_count_census, derangement_count, factorial,
};
use conjiso::optimizer::{
    ben_efraim_check, conclusion_conjecture_check, diaconis_floor_ceil, xi_min, xi_profile,
};
use conjiso::partition::partitions_of;
use conjiso::perm::class_representative;
use conjiso::report::VerificationReport;
use conjiso::sets::{
    appendix_bound, boundary_bruteforce, boundary_via_classes, explicit_from_classes,
    interaction_matrix, lex_segment_boundary, lex_segment_profile, make_a_s, make_block_fixing,
    ClassContext, ConjClassSet,
};
use conjiso::spectral::{
    diaconis_lower_bound, laplacian_eigenvalue, spectral_boundary, two_row_eigenvalue,
    verify_eigenvector, EigenvalueTable,
};
use conjiso::Error;

#[derive(Parser)]
#[command(name = "conjiso", version, about = "Exact edge-isoperimetry in the transposition graph on S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Spectral,
    Matrix,
    Brute,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Spectral,
    Characters,
    Census,
    Bounds,
    Appendix,
    Conjectures,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible character table of S_n
    Chartable {
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
    /// Laplacian eigenvalues mu_alpha of the transposition graph
    Eigs { n: usize },
    /// Edge-boundary of a union of conjugacy classes
    Boundary {
        n: usize,
        /// Cycle types joined by commas, parts by '+', e.g. "2+1+1,3+1"
        #[arg(long)]
        classes: String,
        #[arg(long, value_enum, default_value = "matrix")]
        method: Method,
    },
    /// Boundary of the lexicographic initial segment of size k
    Lexboundary { n: usize, k: u64 },
    /// Minimum boundary over conjugation-invariant sets of size k
    Ximin {
        n: usize,
        k: Option<u128>,
        /// All achievable sizes instead of a single k
        #[arg(long)]
        profile: bool,
    },
    /// Run a verification suite; emits one JSON report per line
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value = "42")]
        seed: u64,
    },
    /// Solve K^(2K) = 1/p
    SolveK {
        /// p as "a/b", a decimal, or scientific notation; 0 < p <= 1/2
        p: String,
    },
    /// Solve i^kappa kappa^kappa = 1/p
    SolveKappa { p: String, i: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) | Error::InvalidPartition(_) | Error::InvalidPermutation(_) => 3,
                Error::ExactnessViolation(_) => 5,
                _ => 4,
            })
        }
    }
}

fn run(command: Command) -> conjiso::Result<ExitCode> {
    match command {
        Command::Chartable { n, format } => chartable(n, format),
        Command::Eigs { n } => eigs(n),
        Command::Boundary { n, classes, method } => boundary(n, &classes, method),
        Command::Lexboundary { n, k } => lexboundary(n, k),
        Command::Ximin { n, k, profile } => ximin(n, k, profile),
        Command::Verify { suite, max_n, seed } => verify(suite, max_n, seed),
        Command::SolveK { p } => {
            let p = parse_rational(&p)?;
            println!("{}", serde_json::to_string(&solve_k(&p)?).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::SolveKappa { p, i } => {
            let p = parse_rational(&p)?;
            println!("{}", serde_json::to_string(&solve_kappa(&p, i)?).unwrap());
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Accepts "a/b", plain integers, decimals, and scientific notation, all
/// converted exactly.
fn parse_rational(s: &str) -> conjiso::Result<BigRational> {
    let bad = |m: &str| Error::Parse(format!("cannot parse '{s}' as a rational: {m}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let numer = a.trim().parse::<BigInt>().map_err(|e| bad(&e.to_string()))?;
        let denom = b.trim().parse::<BigInt>().map_err(|e| bad(&e.to_string()))?;
        if denom.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(BigRational::new(numer, denom));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().map_err(|e| bad(&e.to_string()))?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(bad("no digits"));
    }
    let numer = digits.parse::<BigInt>().map_err(|e| bad(&e.to_string()))?;
    let shift = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        BigRational::from_integer(numer * ten.pow(shift as u32))
    } else {
        BigRational::new(numer, ten.pow((-shift) as u32))
    })
}

fn chartable(n: usize, format: TableFormat) -> conjiso::Result<ExitCode> {
    let ct = character_table(n)?;
    let classes: Vec<String> = ct.partitions().iter().map(|p| p.to_string()).collect();
    match format {
        TableFormat::Json => {
            let rows: Vec<serde_json::Value> = (0..ct.num_classes())
                .map(|a| {
                    json!({
                        "alpha": classes[a],
                        "values": ct.row(a).values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string(&json!({"n": n, "classes": classes, "rows": rows})).unwrap()
            );
        }
        TableFormat::Csv => {
            println!("alpha,{}", classes.join(","));
            for a in 0..ct.num_classes() {
                let vals: Vec<String> =
                    ct.row(a).values().iter().map(|v| v.to_string()).collect();
                println!("{},{}", classes[a], vals.join(","));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn eigs(n: usize) -> conjiso::Result<ExitCode> {
    let table = partitions_of(n)?;
    let eigs = EigenvalueTable::new(&table)?;
    let rows: Vec<serde_json::Value> = table
        .iter()
        .enumerate()
        .map(|(i, p)| json!({"alpha": p.to_string(), "mu": eigs.mu(i)}))
        .collect();
    println!("{}", serde_json::to_string(&json!({"n": n, "eigenvalues": rows})).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn boundary(n: usize, classes: &str, method: Method) -> conjiso::Result<ExitCode> {
    let ctx = ClassContext::new(n)?;
    let set = ConjClassSet::parse(ctx.table(), classes)?;
    let mut results: Vec<(&str, String)> = Vec::new();
    match method {
        Method::Matrix | Method::All => {
            let m = interaction_matrix(&ctx)?;
            results.push(("matrix", boundary_via_classes(&set, &m).to_string()));
        }
        _ => {}
    }
    match method {
        Method::Spectral | Method::All => {
            let ct = character_table(n)?;
            results.push(("spectral", spectral_boundary(&set, &ct)?.to_string()));
        }
        _ => {}
    }
    match method {
        Method::Brute | Method::All => {
            let explicit = explicit_from_classes(&set, &ctx)?;
            results.push(("brute", boundary_bruteforce(&explicit)?.to_string()));
        }
        _ => {}
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let payload = json!({
        "n": n,
        "classes": set.class_strings(ctx.table()),
        "size": set.size(&ctx).to_string(),
        "boundary": results.iter().map(|(m, v)| json!({"method": m, "value": v})).collect::<Vec<_>>(),
        "agree": agree,
    });
    println!("{}", serde_json::to_string(&payload).unwrap());
    if !agree {
        eprintln!("error: boundary methods disagree");
        return Ok(ExitCode::from(5));
    }
    Ok(ExitCode::SUCCESS)
}

fn lexboundary(n: usize, k: u64) -> conjiso::Result<ExitCode> {
    let boundary = lex_segment_boundary(n, k)?;
    let bound = appendix_bound(n, k)?;
    let payload = json!({
        "n": n,
        "k": k,
        "boundary": boundary.to_string(),
        "appendix_bound": bound.to_string(),
        "appendix_bound_float": bound.to_f64(),
    });
    println!("{}", serde_json::to_string(&payload).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn ximin(n: usize, k: Option<u128>, profile: bool) -> conjiso::Result<ExitCode> {
    if profile {
        let ctx = ClassContext::new(n)?;
        let matrix = interaction_matrix(&ctx)?;
        let prof = xi_profile(&ctx, &matrix)?;
        let rows: Vec<serde_json::Value> = prof
            .iter()
            .map(|(&size, &(b, mask))| {
                let set = ConjClassSet::from_mask(ctx.table(), mask);
                json!({
                    "k": size.to_string(),
                    "min_boundary": b.to_string(),
                    "witness": set.class_strings(ctx.table()),
                })
            })
            .collect();
        println!("{}", serde_json::to_string(&json!({"n": n, "profile": rows})).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    let k = k.ok_or_else(|| Error::Parse("ximin needs k or --profile".into()))?;
    let result = xi_min(n, k)?;
    println!("{}", serde_json::to_string(&result).unwrap());
    Ok(ExitCode::SUCCESS)
}

struct SuiteRun {
    asserted_failures: u64,
    reports: u64,
}

impl SuiteRun {
    fn new() -> Self {
        SuiteRun { asserted_failures: 0, reports: 0 }
    }

    /// An asserted invariant: failure flips the exit code.
    fn assert(&mut self, r: VerificationReport) {
        if !r.holds {
            self.asserted_failures += 1;
        }
        self.emit(r);
    }

    /// A recorded observation (conjecture status): never affects exit.
    fn record(&mut self, r: VerificationReport) {
        self.emit(r);
    }

    fn emit(&mut self, r: VerificationReport) {
        self.reports += 1;
        println!("{}", serde_json::to_string(&r).unwrap());
    }

    fn finish(self, suite: &str) -> ExitCode {
        eprintln!(
            "suite {suite}: {} reports, {} asserted failures",
            self.reports, self.asserted_failures
        );
        if self.asserted_failures > 0 {
            ExitCode::from(5)
        } else {
            ExitCode::SUCCESS
        }
    }
}

fn check(id: &str, params: serde_json::Value, lhs: impl ToString, rhs: impl ToString, holds: bool) -> VerificationReport {
    VerificationReport::new(id, params, lhs, rhs, holds)
}

fn verify(suite: Suite, max_n: Option<usize>, seed: u64) -> conjiso::Result<ExitCode> {
    let mut run = SuiteRun::new();
    let code = match suite {
        Suite::Spectral => {
            suite_spectral(&mut run, max_n.unwrap_or(6), seed)?;
            run.finish("spectral")
        }
        Suite::Characters => {
            suite_characters(&mut run, max_n.unwrap_or(8))?;
            run.finish("characters")
        }
        Suite::Census => {
            suite_census(&mut run, max_n.unwrap_or(8))?;
            run.finish("census")
        }
        Suite::Bounds => {
            suite_bounds(&mut run, max_n.unwrap_or(8))?;
            run.finish("bounds")
        }
        Suite::Appendix => {
            suite_appendix(&mut run, max_n.unwrap_or(6))?;
            run.finish("appendix")
        }
        Suite::Conjectures => {
            suite_conjectures(&mut run, max_n.unwrap_or(6))?;
            run.finish("conjectures")
        }
    };
    Ok(code)
}

fn suite_spectral(run: &mut SuiteRun, max_n: usize, seed: u64) -> conjiso::Result<()> {
    // three-way boundary agreement, exhaustive over class subsets
    for n in 2..=max_n.min(6) {
        let ctx = ClassContext::new(n)?;
        let ct = character_table(n)?;
        let matrix = interaction_matrix(&ctx)?;
        let mut agree = true;
        for mask in 0u64..(1 << ctx.num_classes()) {
            let set = ConjClassSet::from_mask(ctx.table(), mask);
            let a = boundary_via_classes(&set, &matrix).to_string();
            let b = spectral_boundary(&set, &ct)?.to_string();
            let c = boundary_bruteforce(&explicit_from_classes(&set, &ctx)?)?.to_string();
            if a != b || b != c {
                agree = false;
            }
        }
        run.assert(check(
            "three-way-boundary-exhaustive",
            json!({"n": n, "subsets": 1u64 << ctx.num_classes()}),
            if agree { "all equal" } else { "mismatch" },
            "all equal",
            agree,
        ));
    }
    if max_n >= 7 {
        let n = 7;
        let ctx = ClassContext::new(n)?;
        let ct = character_table(n)?;
        let matrix = interaction_matrix(&ctx)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut agree = true;
        let samples = 1000u32;
        for _ in 0..samples {
            let mask: u64 = rng.gen_range(0..(1u64 << ctx.num_classes()));
            let set = ConjClassSet::from_mask(ctx.table(), mask);
            let a = boundary_via_classes(&set, &matrix).to_string();
            let b = spectral_boundary(&set, &ct)?.to_string();
            let c = boundary_bruteforce(&explicit_from_classes(&set, &ctx)?)?.to_string();
            if a != b || b != c {
                agree = false;
            }
        }
        run.assert(check(
            "three-way-boundary-sampled",
            json!({"n": n, "samples": samples, "seed": seed}),
            if agree { "all equal" } else { "mismatch" },
            "all equal",
            agree,
        ));
    }
    // eigenvector identity via representative neighbors
    for n in 2..=max_n.min(8) {
        let ct = character_table(n)?;
        let ok = (0..ct.num_classes()).try_fold(true, |acc, a| {
            verify_eigenvector(&ct, a).map(|b| acc && b)
        })?;
        run.assert(check("laplacian-eigenvector", json!({"n": n}), ok, true, ok));
    }
    // dominance monotonicity and mu_2 = n
    for n in 2..=max_n.max(30).min(30) {
        let table = partitions_of(n)?;
        let mut mono = true;
        for a in 0..table.len() {
            for b in 0..table.len() {
                if conjiso::dominates(table.get(a), table.get(b)).unwrap_or(false) {
                    let (ma, mb) = (
                        laplacian_eigenvalue(table.get(a))?,
                        laplacian_eigenvalue(table.get(b))?,
                    );
                    if ma > mb {
                        mono = false;
                    }
                }
            }
        }
        run.assert(check("dominance-monotone", json!({"n": n}), mono, true, mono));
        let mu2 = two_row_eigenvalue(1, n);
        run.assert(check(
            "second-eigenvalue",
            json!({"n": n}),
            mu2,
            n,
            mu2 == n as i64,
        ));
    }
    Ok(())
}

fn suite_characters(run: &mut SuiteRun, max_n: usize) -> conjiso::Result<()> {
    for n in 2..=max_n.min(10) {
        let ct = character_table(n)?;
        // orthonormality of rows under the class-size inner product
        let sizes: Vec<BigInt> = ct
            .partitions()
            .iter()
            .map(|p| class_size(p).map(BigInt::from))
            .collect::<conjiso::Result<_>>()?;
        let n_fact = BigInt::from(factorial(n));
        let mut ortho = true;
        for a in 0..ct.num_classes() {
            for b in a..ct.num_classes() {
                let mut dot = BigInt::zero();
                for c in 0..ct.num_classes() {
                    dot += &sizes[c] * ct.value(a, c) * ct.value(b, c);
                }
                let expect = if a == b { n_fact.clone() } else { BigInt::zero() };
                if dot != expect {
                    ortho = false;
                }
            }
        }
        run.assert(check("orthonormality", json!({"n": n}), ortho, true, ortho));
        // determinantal expansion vs the recursive table
        let mut det_ok = true;
        for alpha in ct.partitions().iter() {
            if n - alpha.part(1) > 4 {
                continue;
            }
            for lambda in ct.partitions().iter() {
                let via_det = chi_via_determinantal(alpha, lambda)?;
                if Some(&via_det) != ct.chi(alpha, lambda) {
                    det_ok = false;
                }
            }
        }
        run.assert(check("determinantal-vs-recursive", json!({"n": n}), det_ok, true, det_ok));
    }
    // permutation characters against tabloid brute force
    for n in 2..=max_n.min(6) {
        let table = partitions_of(n)?;
        let mut ok = true;
        for beta in table.iter() {
            for lambda in table.iter() {
                let fast = xi_on_class(beta, lambda)?;
                let slow = xi_bruteforce(beta, &class_representative(lambda))?;
                if fast != slow {
                    ok = false;
                }
            }
        }
        run.assert(check("xi-vs-bruteforce", json!({"n": n}), ok, true, ok));
    }
    Ok(())
}

fn suite_census(run: &mut SuiteRun, max_n: usize) -> conjiso::Result<()> {
    // derangements: d_m >= m!/3, with d_m m! exact
    for m in 2..=12usize {
        let d = derangement_count(m);
        let holds = &d * 3u32 >= factorial(m);
        run.assert(check("derangement-floor", json!({"m": m}), d.to_string(), format!("{}!/3", m), holds));
    }
    // A_s sandwich n!/(3 s!) <= |A_s| <= n!/s!
    for n in 3..=max_n.min(10) {
        let ctx = ClassContext::new(n)?;
        let mut ok = true;
        for s in 0..=n.saturating_sub(2) {
            let size = make_a_s(s, &ctx).size_big(ctx.table())?;
            let nf = factorial(n);
            let sf = factorial(s);
            if &size * &sf > nf || &size * 3u32 * &sf < nf {
                ok = false;
            }
        }
        run.assert(check("a-s-sandwich", json!({"n": n}), ok, true, ok));
    }
    // cycle-count census: integrality, row sums, and the two-sided bound
    for n in 2..=max_n.min(10) {
        let nf = factorial(n);
        let mut ok = true;
        for i in 1..=n {
            let mut total = num_bigint::BigUint::zero();
            for j in 0..=n / i {
                let d = cycle_count_census(n, i, j)?;
                if !(i == 1 && j == n - 1) && j >= 1 {
                    // n!/(3 i^j j!) <= D <= n!/(i^j j!), except (i,j)=(1,n-1)
                    let denom = num_bigint::BigUint::from(i as u64).pow(j as u32) * factorial(j);
                    if &d * &denom > nf || &d * 3u32 * &denom < nf {
                        ok = false;
                    }
                }
                total += d;
            }
            if total != nf {
                ok = false;
            }
        }
        run.assert(check("cycle-census", json!({"n": n}), ok, true, ok));
    }
    // block-fixing sets: (n/(2k))(n-k)! < |A| <= (n/k)(n-k)! for 1 < k <= n/2
    for n in 4..=max_n.min(8) {
        for k in (2..=n / 2).filter(|k| n % k == 0) {
            let set = make_block_fixing(n, k)?;
            let size = set.len() as u128;
            let f = factorial(n - k).to_u128().unwrap();
            let ok = 2 * k as u128 * size > n as u128 * f && k as u128 * size <= n as u128 * f;
            run.assert(check(
                "block-fixing-sandwich",
                json!({"n": n, "k": k, "size": size.to_string()}),
                ok,
                true,
                ok,
            ));
        }
    }
    // partial sums of the partition function: sum_{i=0}^{t-1} p(i) <= t!
    let mut ok = true;
    for t in 1..=20usize {
        let sum: u64 = (0..t)
            .map(|i| {
                if i == 0 {
                    1
                } else {
                    partitions_of(i).map(|x| x.len() as u64).unwrap_or(0)
                }
            })
            .sum();
        if num_bigint::BigUint::from(sum) > factorial(t) {
            ok = false;
        }
    }
    run.assert(check("partition-sum-vs-factorial", json!({"t_max": 20}), ok, true, ok));
    Ok(())
}

fn suite_bounds(run: &mut SuiteRun, max_n: usize) -> conjiso::Result<()> {
    // K and t_p sandwiches on a p-grid down to 1e-30
    for exp in [1u32, 2, 5, 10, 20, 30] {
        let p = BigRational::new(BigInt::one(), BigInt::from(10u8).pow(exp));
        for m in [3u32, 18] {
            let bp = solve_k_with_m(&p, m)?;
            let n = (bp.k.ceil() as usize).max(2);
            run.assert(check(
                "k-sandwich",
                json!({"p": format!("1e-{exp}"), "m": m, "k": bp.k, "residual": bp.residual}),
                bp.k,
                "sandwiched",
                bp.k_sandwich_holds(n) && bp.residual <= 1e-12,
            ));
            if bp.t_p_sandwich_applicable() {
                run.assert(check(
                    "t-p-sandwich",
                    json!({"p": format!("1e-{exp}"), "m": m, "t_p": bp.t_p}),
                    bp.t_p,
                    "sandwiched",
                    bp.t_p_sandwich_holds(n),
                ));
            } else {
                run.record(check(
                    "t-p-sandwich-skipped",
                    json!({"p": format!("1e-{exp}"), "m": m, "t_p": bp.t_p}),
                    "t_p = 0",
                    "lower bound presupposes t_p >= 1",
                    true,
                ));
            }
        }
    }
    // kappa solver at a few (p, i)
    for i in [1u64, 2, 10] {
        let p = BigRational::new(BigInt::one(), BigInt::from(10u8).pow(12));
        let kp = solve_kappa(&p, i)?;
        run.assert(check(
            "kappa-residual",
            json!({"p": "1e-12", "i": i, "kappa": kp.kappa}),
            kp.residual,
            1e-12,
            kp.residual <= 1e-12,
        ));
    }
    // Jensen chain, exhaustively over cycle types
    for n in 2..=max_n.min(9) {
        let mut ok = true;
        for lambda in partitions_of(n)?.iter() {
            for s in 1..=(n / 2).min(4) {
                if !jensen_chain_check(lambda, s)? {
                    ok = false;
                }
            }
        }
        run.assert(check("jensen-chain", json!({"n": n}), ok, true, ok));
    }
    // factorial tail bound with certified remainder
    for m in 3..=6u32 {
        let k = (m as f64).exp().ceil() as u64;
        for s in [1u64, k / (2 * m as u64), k / m as u64] {
            if s == 0 || m as u64 * s > k {
                continue;
            }
            let r = factorial_tail_check(s, k, m)?;
            run.assert(check(
                "factorial-tail",
                json!({"m": m, "k": k, "s": s}),
                r.lhs_log2_upper,
                r.rhs_log2,
                r.holds,
            ));
        }
    }
    // weight-bound ingredient chain
    for n in 3..=max_n.min(9) {
        let ct = character_table(n)?;
        let mut ok = true;
        for alpha in ct.partitions().iter() {
            if n - alpha.part(1) > 4 {
                continue;
            }
            let r = w_bound_ingredients(alpha, &ct)?;
            if !(r.boundchi_holds && r.collapse_holds && r.coeff_bound_holds) {
                ok = false;
            }
        }
        run.assert(check("w-bound-ingredients", json!({"n": n}), ok, true, ok));
    }
    // fixed-point averages of A_s (reported; the inequality it feeds is
    // asymptotic)
    for n in 4..=max_n.min(8) {
        let ctx = ClassContext::new(n)?;
        for s in 1..=2usize {
            let a = make_a_s(s, &ctx);
            let lhs = weight_lemma_lhs(&a, s, &ctx)?;
            run.record(check(
                "weight-lemma-lhs",
                json!({"n": n, "s": s}),
                lhs.to_string(),
                "reported only",
                true,
            ));
        }
    }
    // empirical isoperimetric ratio sweep
    for n in 3..=max_n.min(7) {
        let ctx = ClassContext::new(n)?;
        let matrix = interaction_matrix(&ctx)?;
        let report = isoperimetry_ratio_sweep(&ctx, &matrix)?;
        run.assert(check(
            "spectral-floor-on-sweep",
            json!({"n": n, "sets": report.sets_examined}),
            report.floor_holds,
            true,
            report.floor_holds,
        ));
        run.record(
            check(
                "isoperimetry-ratio",
                json!({"n": n}),
                report.min_ratio,
                "positive, no asserted constant",
                report.min_ratio > 0.0,
            )
            .with_witness(json!({
                "argmin_classes": report.argmin_classes,
                "argmin_size": report.argmin_size,
                "argmin_boundary": report.argmin_boundary,
            })),
        );
    }
    Ok(())
}

fn suite_appendix(run: &mut SuiteRun, max_n: usize) -> conjiso::Result<()> {
    for n in 2..=max_n.min(7) {
        let profile = lex_segment_profile(n)?;
        let mut ok = true;
        for (k, &b) in profile.iter().enumerate().skip(1) {
            let bound = appendix_bound(n, k as u64)?;
            if BigRational::from_integer(BigInt::from(b)) > bound {
                ok = false;
            }
        }
        run.assert(check(
            "appendix-bound-all-k",
            json!({"n": n, "k_max": profile.len() - 1}),
            ok,
            true,
            ok,
        ));
        // equality cases of the spectral-gap bound at k = c(n-1)!
        let nm1: u64 = (1..n as u64).product();
        let mut eq_ok = true;
        for c in 0..=n as u64 {
            let k = c * nm1;
            let b = lex_segment_boundary(n, k)?;
            let floor = diaconis_lower_bound(&num_bigint::BigUint::from(k), n);
            if BigRational::from_integer(BigInt::from(b)) != floor {
                eq_ok = false;
            }
        }
        run.assert(check("spectral-gap-equality", json!({"n": n}), eq_ok, true, eq_ok));
    }
    Ok(())
}

fn suite_conjectures(run: &mut SuiteRun, max_n: usize) -> conjiso::Result<()> {
    for n in 2..=max_n.min(7) {
        let ctx = ClassContext::new(n)?;
        let matrix = interaction_matrix(&ctx)?;
        let profile = xi_profile(&ctx, &matrix)?;
        let mut floor_ok = true;
        for (&k, &(b, _)) in &profile {
            if b < diaconis_floor_ceil(k, n) {
                floor_ok = false;
            }
        }
        run.assert(check("xi-spectral-floor", json!({"n": n}), floor_ok, true, floor_ok));
        run.record(conclusion_conjecture_check(n)?);
    }
    for n in 3..=max_n.min(4) {
        run.record(ben_efraim_check(n)?);
    }
    Ok(())
}
