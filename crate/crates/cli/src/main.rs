//! Command-line front end: elect, verify, improve, enumerate, dominates,
//! spcheck, gen, relations.
//!
//! Output is line-oriented `key=value` (human-readable extras behind
//! `--pretty`). Exit codes: 0 success / efficient / no manipulation found;
//! 1 negative finding (an improvement or counterexample was printed);
//! 2 usage error; 3 parse or validation error; 4 instance too large.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use parcom::extensions::{compare, Extension};
use parcom::mechanisms::{elect, sp_check, MechanismId, Permutation, SampleBudget};
use parcom::model::{Committee, Profile};
use parcom::oracle::{
    enumerate_efficient_capped, improvement_chain, verify_bruteforce_capped, Verdict,
    DEFAULT_ENUM_CAP,
};
use parcom::polyalgos::{rs_improve_dichotomous_tw2, worst_verify};
use parcom::reductions::{
    profile_from_hitting_set, profile_from_vertex_cover, SetSystem, SimpleGraph,
};
use parcom::relations::relations_report;
use parcom::sampling::{random_profile, seeded_rng};
use parcom::Error;

#[derive(Parser)]
#[command(name = "parcom", version, about = "Committee voting under weak orders")]
struct Cli {
    /// Append human-readable summaries to the key=value output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtArg {
    Rs,
    Dl,
    Ul,
    Best,
    Worst,
}

impl From<ExtArg> for Extension {
    fn from(e: ExtArg) -> Extension {
        match e {
            ExtArg::Rs => Extension::Rs,
            ExtArg::Dl => Extension::Dl,
            ExtArg::Ul => Extension::Ul,
            ExtArg::Best => Extension::Best,
            ExtArg::Worst => Extension::Worst,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Sd,
    WorstSd,
    BestGreedy,
    FairSd,
    Score,
}

impl From<AlgoArg> for MechanismId {
    fn from(a: AlgoArg) -> MechanismId {
        match a {
            AlgoArg::Sd => MechanismId::Sd,
            AlgoArg::WorstSd => MechanismId::WorstSd,
            AlgoArg::BestGreedy => MechanismId::BestGreedyStrict,
            AlgoArg::FairSd => MechanismId::FairSd,
            AlgoArg::Score => MechanismId::Score,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    Auto,
    Brute,
    Poly,
}

#[derive(Args)]
struct CapArg {
    /// Cap on the number of committees an exhaustive scan may visit.
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    cap: u128,
}

#[derive(Subcommand)]
enum Command {
    /// Run an electing mechanism.
    Elect {
        profile: String,
        #[arg(long)]
        algo: AlgoArg,
        /// Agent order as 1-based ids, e.g. `2,1,3`; defaults to identity.
        #[arg(long)]
        perm: Option<String>,
        /// Accepted for interface stability; the mechanisms are deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check whether a committee is efficient; print a witness if not.
    Verify {
        profile: String,
        #[arg(long)]
        ext: ExtArg,
        #[arg(long)]
        committee: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Apply improvements until an efficient committee is reached.
    Improve {
        profile: String,
        #[arg(long)]
        ext: ExtArg,
        #[arg(long)]
        committee: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[command(flatten)]
        cap: CapArg,
    },
    /// List all efficient committees.
    Enumerate {
        profile: String,
        #[arg(long)]
        ext: ExtArg,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Compare two committees for one agent.
    Dominates {
        profile: String,
        #[arg(long)]
        ext: ExtArg,
        /// 1-based agent id.
        #[arg(long)]
        agent: usize,
        w: String,
        v: String,
    },
    /// Search for a profitable misreport against a mechanism.
    Spcheck {
        profile: String,
        #[arg(long)]
        algo: AlgoArg,
        #[arg(long)]
        perm: Option<String>,
        /// Sample this many random misreports per agent (required beyond
        /// four alternatives, where exhaustive enumeration stops).
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate a profile: random, or from a hardness construction.
    Gen {
        #[arg(long)]
        model: GenModel,
        /// Alternatives (ic).
        #[arg(long)]
        m: Option<usize>,
        /// Agents (ic).
        #[arg(long)]
        n: Option<usize>,
        /// Committee size (ic, vc, hs).
        #[arg(long)]
        k: Option<usize>,
        /// Upper bound on indifference classes per agent (ic; default m).
        #[arg(long)]
        classes: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge list file, one `u v` per line (vc).
        #[arg(long)]
        graph: Option<String>,
        /// Set system file, one comma-separated subset per line (hs).
        #[arg(long)]
        sets: Option<String>,
    },
    /// Compute all five efficient sets and check the relations among them.
    Relations {
        profile: String,
        #[command(flatten)]
        cap: CapArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenModel {
    /// Impartial culture: independent random weak orders.
    Ic,
    /// Vertex-cover hardness construction with distinguished committee D.
    Vc,
    /// Hitting-set hardness construction.
    Hs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::PreconditionViolated(_) => 2,
        Error::SizeMismatch { .. } | Error::Profile(_) | Error::NonImprovingStep => 3,
        Error::InstanceTooLarge { .. } => 4,
    }
}

fn load_profile(path: &str) -> Result<Profile, Error> {
    let text = fs::read_to_string(path).map_err(|e| {
        Error::Profile(parcom::ProfileError::Parse {
            line: 0,
            msg: format!("cannot read {path}: {e}"),
        })
    })?;
    Ok(Profile::parse(&text)?)
}

fn parse_perm(text: Option<&str>, n: usize) -> Result<Permutation, Error> {
    match text {
        Some(s) => Permutation::parse_one_based(s, n),
        None => Ok(Permutation::identity(n)),
    }
}

fn committee_arg(profile: &Profile, text: &str) -> Result<Committee, Error> {
    let committee = Committee::parse(text)?;
    profile.check_committee(&committee)?;
    Ok(committee)
}

fn run(cli: Cli) -> Result<u8, Error> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Elect { profile, algo, perm, seed: _ } => {
            let p = load_profile(&profile)?;
            let perm = parse_perm(perm.as_deref(), p.num_agents())?;
            let mech: MechanismId = algo.into();
            let elected = elect(mech, &p, &perm)?;
            println!("elected={elected}");
            if pretty {
                println!("# elected committee of size {}", elected.len());
            }
            Ok(0)
        }
        Command::Verify { profile, ext, committee, method, cap } => {
            let p = load_profile(&profile)?;
            let ext: Extension = ext.into();
            let w = committee_arg(&p, &committee)?;
            let verdict = run_verify(&p, ext, &w, method, cap.cap)?;
            match verdict {
                Verdict::Efficient => {
                    println!("efficient=true");
                    if pretty {
                        println!("# committee {w} is {ext}-efficient");
                    }
                    Ok(0)
                }
                Verdict::Improvable(witness) => {
                    println!("efficient=false");
                    println!("witness={witness}");
                    if pretty {
                        println!("# committee {w} is improved by {witness} under {ext}");
                    }
                    Ok(1)
                }
            }
        }
        Command::Improve { profile, ext, committee, method, cap } => {
            let p = load_profile(&profile)?;
            let ext: Extension = ext.into();
            if !matches!(ext, Extension::Rs | Extension::Worst) {
                return Err(Error::PreconditionViolated(format!(
                    "improve supports rs and worst, not {ext}"
                )));
            }
            let w = committee_arg(&p, &committee)?;
            let cap = cap.cap;
            let chain = improvement_chain(&p, ext, w, |p, c| {
                Ok(run_verify(p, ext, c, method, cap)?.into_witness())
            })?;
            println!("start={}", chain[0]);
            for step in &chain[1..] {
                println!("witness={step}");
            }
            println!("final={}", chain.last().unwrap());
            println!("steps={}", chain.len() - 1);
            if pretty {
                println!("# reached an {ext}-efficient committee in {} steps", chain.len() - 1);
            }
            Ok(if chain.len() > 1 { 1 } else { 0 })
        }
        Command::Enumerate { profile, ext, cap } => {
            let p = load_profile(&profile)?;
            let ext: Extension = ext.into();
            let all = enumerate_efficient_capped(&p, ext, cap.cap)?;
            for w in &all {
                println!("committee={w}");
            }
            println!("count={}", all.len());
            Ok(0)
        }
        Command::Dominates { profile, ext, agent, w, v } => {
            let p = load_profile(&profile)?;
            let ext: Extension = ext.into();
            if agent == 0 || agent > p.num_agents() {
                return Err(Error::Profile(parcom::ProfileError::Validation {
                    msg: format!("agent {agent} out of range 1..={}", p.num_agents()),
                }));
            }
            let w = committee_arg(&p, &w)?;
            let v = committee_arg(&p, &v)?;
            let cmp = compare(ext, p.order(agent - 1), &w, &v)?;
            println!("{cmp}");
            Ok(0)
        }
        Command::Spcheck { profile, algo, perm, samples, seed } => {
            let p = load_profile(&profile)?;
            let perm = parse_perm(perm.as_deref(), p.num_agents())?;
            let mech: MechanismId = algo.into();
            let budget = samples.map(|samples| SampleBudget { samples, seed });
            match sp_check(mech, &p, &perm, budget)? {
                None => {
                    println!("manipulable=false");
                    Ok(0)
                }
                Some(hit) => {
                    println!("manipulable=true");
                    println!("agent={}", hit.agent + 1);
                    println!("misreport={}", hit.misreport);
                    println!("honest={}", hit.honest);
                    println!("witness={}", hit.manipulated);
                    if pretty {
                        println!(
                            "# agent {} turns {} into {} by reporting {}",
                            hit.agent + 1,
                            hit.honest,
                            hit.manipulated,
                            hit.misreport
                        );
                    }
                    Ok(1)
                }
            }
        }
        Command::Gen { model, m, n, k, classes, seed, graph, sets } => {
            let need = |opt: Option<usize>, name: &str| {
                opt.ok_or_else(|| Error::PreconditionViolated(format!("--{name} is required")))
            };
            match model {
                GenModel::Ic => {
                    let m = need(m, "m")?;
                    let n = need(n, "n")?;
                    let k = need(k, "k")?;
                    if m == 0 || n == 0 || k == 0 || k > m {
                        return Err(Error::PreconditionViolated(
                            "need m >= 1, n >= 1, 1 <= k <= m".into(),
                        ));
                    }
                    let classes = classes.unwrap_or(m);
                    let mut rng = seeded_rng(seed);
                    let p = random_profile(m, n, k, classes, &mut rng);
                    print!("{}", p.to_text());
                }
                GenModel::Vc => {
                    let path = graph.ok_or_else(|| {
                        Error::PreconditionViolated("--graph is required".into())
                    })?;
                    let k = need(k, "k")?;
                    let text = fs::read_to_string(&path).map_err(|e| {
                        Error::PreconditionViolated(format!("cannot read {path}: {e}"))
                    })?;
                    let g = SimpleGraph::parse_edge_list(&text)?;
                    let (p, d) = profile_from_vertex_cover(&g, k)?;
                    print!("{}", p.to_text());
                    println!("# D = {d}");
                }
                GenModel::Hs => {
                    let path = sets.ok_or_else(|| {
                        Error::PreconditionViolated("--sets is required".into())
                    })?;
                    let k = need(k, "k")?;
                    let text = fs::read_to_string(&path).map_err(|e| {
                        Error::PreconditionViolated(format!("cannot read {path}: {e}"))
                    })?;
                    let s = SetSystem::parse(&text)?;
                    let p = profile_from_hitting_set(&s, k)?;
                    print!("{}", p.to_text());
                }
            }
            Ok(0)
        }
        Command::Relations { profile, cap } => {
            let p = load_profile(&profile)?;
            let report = relations_report(&p, cap.cap)?;
            for (ext, set) in &report.efficient {
                let joined: Vec<String> = set.iter().map(|w| w.to_string()).collect();
                println!("efficient[{ext}]={}", joined.join(";"));
            }
            for check in &report.checks {
                println!(
                    "check[{}]={}",
                    check.name,
                    if check.pass { "PASS" } else { "FAIL" }
                );
            }
            if pretty {
                println!("# {:<16} result", "check");
                for check in &report.checks {
                    println!(
                        "# {:<16} {}",
                        check.name,
                        if check.pass { "PASS" } else { "FAIL" }
                    );
                }
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

/// Verification with method selection: `poly` insists on the polynomial
/// algorithm (usage error where none applies), `auto` uses it when its
/// preconditions hold and falls back to brute force otherwise.
fn run_verify(
    p: &Profile,
    ext: Extension,
    w: &Committee,
    method: Method,
    cap: u128,
) -> Result<Verdict, Error> {
    let tw2_ok = p.is_dichotomous() && p.topwidth() <= 2;
    match (method, ext) {
        (Method::Brute, _) => verify_bruteforce_capped(p, ext, w, cap),
        (Method::Poly, Extension::Rs) => rs_improve_dichotomous_tw2(p, w),
        (Method::Poly, Extension::Worst) => worst_verify(p, w),
        (Method::Poly, other) => Err(Error::PreconditionViolated(format!(
            "no polynomial verifier for {other}"
        ))),
        (Method::Auto, Extension::Rs) if tw2_ok => rs_improve_dichotomous_tw2(p, w),
        (Method::Auto, Extension::Worst) => worst_verify(p, w),
        (Method::Auto, _) => verify_bruteforce_capped(p, ext, w, cap),
    }
}
