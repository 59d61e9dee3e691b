//! Command-line front end: normal forms, automorphism application, orbit
//! listing and the verification catalog.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! errors (bad words, unknown generators, invalid flags).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mennicke::checks::{run_checks, CheckCtx, CheckStatus};
use mennicke::ggroup::{self, GElem};
use mennicke::mendo::{aut_m_generators, orbits};
use mennicke::pgroup::{self, PElem};
use mennicke::vgroup::{self, VAutElem, VElem};
use mennicke::word::{parse_word, GroupId};
use mennicke::{collect, MElem};

#[derive(Parser)]
#[command(
    name = "mennicke",
    version,
    about = "Exact arithmetic and verification for the Mennicke group M(-1,-1,-1) and its automorphism tower"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Collect a word to its normal form.
    Nf {
        /// Group of the word: M, V, G or P.
        #[arg(long, default_value = "M")]
        group: String,
        /// The word, e.g. "x y^-2 z"; "1" is the empty word.
        word: String,
    },
    /// Apply an automorphism to a word.
    Apply {
        /// The automorphism: a word over X..D (or ..E), or theta, A, Psi, E.
        #[arg(long)]
        aut: String,
        /// The word to act on.
        #[arg(long)]
        to: String,
        /// Group of the target word (inferred from the automorphism when omitted).
        #[arg(long)]
        group: Option<String>,
    },
    /// Print the orbit partition of the eight cosets of M².
    Orbits,
    /// Run verification suites.
    Verify {
        /// Suite numbers to run (2..20); repeatable.
        #[arg(long = "section")]
        sections: Vec<u8>,
        /// Run every suite.
        #[arg(long)]
        all: bool,
        /// Seed for the sampled properties.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample count for the sampled properties.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// List the available checks instead of running them.
        #[arg(long)]
        list: bool,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_group(s: &str) -> Result<GroupId, String> {
    s.parse::<GroupId>()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Nf { group, word } => cmd_nf(&group, &word),
        Command::Apply { aut, to, group } => cmd_apply(&aut, &to, group.as_deref()),
        Command::Orbits => {
            let parts = orbits(&aut_m_generators());
            let text: Vec<String> = parts
                .iter()
                .map(|orbit| {
                    let names: Vec<String> = orbit.iter().map(|c| c.to_string()).collect();
                    format!("{{{}}}", names.join(", "))
                })
                .collect();
            println!("{}", text.join(" "));
            ExitCode::SUCCESS
        }
        Command::Verify {
            sections,
            all,
            seed,
            samples,
            format,
            list,
        } => cmd_verify(&sections, all, seed, samples, format, list),
    }
}

fn cmd_nf(group: &str, word: &str) -> ExitCode {
    let group = match parse_group(group) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let parsed = match parse_word(word, group) {
        Ok(w) => w,
        Err(e) => return usage_error(&e.to_string()),
    };
    match group {
        GroupId::M | GroupId::G | GroupId::P => println!("{}", collect(&parsed, group)),
        // V words are evaluated through M-coordinates; the normal form is
        // the M normal form of the element
        GroupId::V => println!("{}", vgroup::eval_v_word(&parsed)),
    }
    ExitCode::SUCCESS
}

/// The automorphism named on the command line.
enum AutSpec {
    G(GElem),
    P(PElem),
    VAut(VAutElem),
}

fn parse_aut(spec: &str) -> Result<AutSpec, String> {
    match spec {
        "theta" => return Ok(AutSpec::G(GElem::gen_d())),
        "Psi" | "psi" => return Ok(AutSpec::VAut(VAutElem::psi_elem())),
        "E" => return Ok(AutSpec::P(PElem::gen_e())),
        _ => {}
    }
    if spec.contains('E') {
        let w = parse_word(spec, GroupId::P).map_err(|e| e.to_string())?;
        Ok(AutSpec::P(pgroup::eval_word(&w)))
    } else {
        let w = parse_word(spec, GroupId::G).map_err(|e| e.to_string())?;
        Ok(AutSpec::G(ggroup::eval_word(&w)))
    }
}

fn cmd_apply(aut: &str, to: &str, group: Option<&str>) -> ExitCode {
    let aut = match parse_aut(aut) {
        Ok(a) => a,
        Err(e) => return usage_error(&e),
    };
    let group = match group.map(parse_group).transpose() {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    match aut {
        AutSpec::G(g) => {
            let target_group = group.unwrap_or(GroupId::M);
            let target: MElem = match target_group {
                GroupId::M => match parse_word(to, GroupId::M) {
                    Ok(w) => mennicke::ggroup::eval_word(&to_g_free(&w)).m.clone(),
                    Err(e) => return usage_error(&e.to_string()),
                },
                GroupId::V => match parse_word(to, GroupId::V) {
                    Ok(w) => vgroup::eval_v_word(&w).as_melem().clone(),
                    Err(e) => return usage_error(&e.to_string()),
                },
                _ => return usage_error("a G-automorphism acts on words of M or V"),
            };
            println!("{}", g.semantic().apply(&target));
        }
        AutSpec::VAut(p) => {
            let target_group = group.unwrap_or(GroupId::V);
            let melem = match target_group {
                GroupId::V => match parse_word(to, GroupId::V) {
                    Ok(w) => vgroup::eval_v_word(&w).as_melem().clone(),
                    Err(e) => return usage_error(&e.to_string()),
                },
                GroupId::M => match parse_word(to, GroupId::M) {
                    Ok(w) => mennicke::ggroup::eval_word(&to_g_free(&w)).m.clone(),
                    Err(e) => return usage_error(&e.to_string()),
                },
                _ => return usage_error("Psi acts on words of V"),
            };
            let Some(v) = VElem::new(melem) else {
                return usage_error("the target word lies outside V (odd exponent sum)");
            };
            println!("{}", p.act(&v));
        }
        AutSpec::P(p) => {
            if matches!(group, Some(GroupId::M) | Some(GroupId::V)) {
                return usage_error("an automorphism involving E acts on words of G");
            }
            let w = match parse_word(to, GroupId::G) {
                Ok(w) => w,
                Err(e) => return usage_error(&e.to_string()),
            };
            println!("{}", p.act_on_g(&ggroup::eval_word(&w)));
        }
    }
    ExitCode::SUCCESS
}

/// Reinterprets an M-word as a word in the inner copy ⟨X, Y, Z⟩ of G, which
/// shares the multiplication law of M.
fn to_g_free(w: &mennicke::word::Word) -> mennicke::word::Word {
    let mut out = mennicke::word::Word::empty();
    for l in w.letters() {
        let c = match l.gen.0 {
            'x' => 'X',
            'y' => 'Y',
            'z' => 'Z',
            c => unreachable!("{c} in an M word"),
        };
        out.push(mennicke::word::Gen(c), l.exp);
    }
    out
}

fn cmd_verify(
    sections: &[u8],
    all: bool,
    seed: u64,
    samples: usize,
    format: Format,
    list: bool,
) -> ExitCode {
    if list {
        for def in mennicke::checks::registry() {
            println!("{:<28} suite {:>2}  {}", def.id, def.section, def.title);
        }
        return ExitCode::SUCCESS;
    }
    if !all && sections.is_empty() {
        return usage_error("pass --all or at least one --section N (N in 2..20)");
    }
    if let Some(bad) = sections.iter().find(|s| !(2..=20).contains(*s)) {
        return usage_error(&format!("suite {bad} is out of range 2..20"));
    }
    let ctx = CheckCtx { seed, samples };
    let filter = if all { None } else { Some(sections) };
    let results = run_checks(filter, &ctx);
    if results.is_empty() {
        return usage_error("the selected sections contain no checks");
    }
    let mut ok = true;
    match format {
        Format::Text => {
            for r in &results {
                println!(
                    "{:<28} [{}] {} ({} ms)",
                    r.check_id, r.status, r.detail, r.elapsed_ms
                );
                ok &= r.status == CheckStatus::Pass;
            }
            let passed = results
                .iter()
                .filter(|r| r.status == CheckStatus::Pass)
                .count();
            println!("{passed}/{} checks passed", results.len());
        }
        Format::Json => {
            for r in &results {
                println!("{}", serde_json::to_string(r).expect("serializable result"));
                ok &= r.status == CheckStatus::Pass;
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
