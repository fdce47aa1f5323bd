use bruhat_core::bruhat::{
    compare, dm_chain, is_cover, relative_candidates, CoverVerdict, NotCoverReason, Relation,
};
use bruhat_core::complex::{
    f_h_vectors, ideal_m2, ideal_text, lex_shelling_order, nested_shellability_report,
    order_complex, stanley_reisner_generators,
};
use bruhat_core::interval::{
    build_filtration, el_check, enumerate_between, grading_check, maximal_chains, IntervalPoset,
};
use bruhat_core::perm::{dmf, pseudo_length_prefix};
use bruhat_core::{PatternPermutation, Transposition};
use serde::Serialize;
use serde_json::json;

use crate::args::{
    BruhatCommand, Cli, Command, ComplexCommand, IntervalCommand, IntervalOut, Pair, PermCommand,
};
use crate::input::parse_permutation;
use crate::sample::sample_below;
use crate::{CliError, Code, Format, RunConfig};

/// Renderings of one command result; the format picks one.
struct Reply {
    text: String,
    json: String,
    dot: Option<String>,
    m2: Option<String>,
    code: Code,
}

impl Reply {
    fn new(text: impl Into<String>, json: String) -> Self {
        Self {
            text: text.into(),
            json,
            dot: None,
            m2: None,
            code: Code::Success,
        }
    }

    fn code(mut self, code: Code) -> Self {
        self.code = code;
        self
    }

    fn render(self, format: Format) -> Result<(String, Code), CliError> {
        let body = match format {
            Format::Text => self.text,
            Format::Json => self.json,
            Format::Dot => self
                .dot
                .ok_or_else(|| CliError::Usage("this command has no dot output".into()))?,
            Format::M2 => self
                .m2
                .ok_or_else(|| CliError::Usage("this command has no m2 output".into()))?,
        };
        let mut body = body;
        if !body.ends_with('\n') {
            body.push('\n');
        }
        Ok((body, self.code))
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("values serialize")
}

pub(crate) fn execute(cli: &Cli) -> Result<(String, Code), CliError> {
    let mut config = RunConfig {
        horizon: cli.horizon,
        output_format: cli.format,
        ..RunConfig::default()
    };
    let reply = match &cli.command {
        Command::Perm(cmd) => perm(cmd)?,
        Command::Bruhat(cmd) => {
            if let BruhatCommand::Chain { max_steps, .. } = cmd {
                config.max_steps = *max_steps;
            }
            bruhat(cmd, &config)?
        }
        Command::Interval(cmd) => {
            if let IntervalCommand::Enum { out: IntervalOut::Dot, .. } = cmd {
                config.output_format = Format::Dot;
            }
            interval(cmd)?
        }
        Command::Complex(cmd) => {
            match cmd {
                ComplexCommand::Srideal { m2: true, .. } => config.output_format = Format::M2,
                ComplexCommand::Nested { depth, .. } => config.depth = *depth,
                _ => {}
            }
            complex(cmd, &config)?
        }
    };
    reply.render(config.output_format)
}

fn pair(p: &Pair) -> Result<(PatternPermutation, PatternPermutation), CliError> {
    Ok((parse_permutation(&p.lower)?, parse_permutation(&p.upper)?))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn perm(cmd: &PermCommand) -> Result<Reply, CliError> {
    Ok(match cmd {
        PermCommand::Eval { perm, n } => {
            if *n == 0 {
                return Err(CliError::Usage("positions start at 1".into()));
            }
            let v = parse_permutation(perm)?.eval(*n);
            Reply::new(v.to_string(), to_json(&json!(v)))
        }
        PermCommand::Invert { perm } => {
            let inv = parse_permutation(perm)?.inverse();
            Reply::new(inv.to_string(), to_json(&inv))
        }
        PermCommand::Oneline { perm, len } => {
            let sigma = parse_permutation(perm)?;
            Reply::new(sigma.one_line_string(*len), to_json(&json!(sigma.one_line(*len))))
        }
        PermCommand::Pseudolen { perm, len } => {
            let values = pseudo_length_prefix(&parse_permutation(perm)?, *len);
            Reply::new(join(values.values()), to_json(&values))
        }
        PermCommand::Validate { perm } => match parse_permutation(perm) {
            Ok(sigma) => {
                let canonical = serde_json::to_string(&sigma).expect("values serialize");
                Reply::new(format!("valid {canonical}"), to_json(&sigma))
            }
            Err(CliError::Invalid(e)) => {
                Reply::new(format!("invalid: {e}"), to_json(&json!({ "error": e.to_string() }))).code(Code::Negative)
            }
            Err(e) => return Err(e),
        },
    })
}

fn bruhat(cmd: &BruhatCommand, config: &RunConfig) -> Result<Reply, CliError> {
    Ok(match cmd {
        BruhatCommand::Leq { pair: p } => {
            let (sigma, omega) = pair(p)?;
            let verdict = compare(&sigma, &omega, config.horizon as usize);
            let (text, code) = match (verdict.relation, verdict.certified) {
                (Relation::LessOrEqual, true) => ("LE certified".to_string(), Code::Success),
                (Relation::LessOrEqual, false) => (
                    format!("LE inconclusive: no violation in rows 1..={}", config.horizon),
                    Code::Inconclusive,
                ),
                (Relation::NotLessOrEqual, _) => {
                    let row = verdict.witness.as_ref().map_or(0, |w| w.n);
                    (format!("NOT-LE certified: tableau violation at row {row}"), Code::Negative)
                }
            };
            Reply::new(text, to_json(&verdict)).code(code)
        }
        BruhatCommand::Cover { pair: p } => {
            let (sigma, nu) = pair(p)?;
            let verdict = is_cover(&sigma, &nu);
            let text = match verdict {
                CoverVerdict::Cover(t) => format!("cover {t}"),
                CoverVerdict::NotCover(reason) => format!("not a cover: {}", reason_text(reason)),
            };
            let code = if verdict.holds() { Code::Success } else { Code::Negative };
            Reply::new(text, to_json(&verdict)).code(code)
        }
        BruhatCommand::Dmf { pair: p } => {
            let (sigma, omega) = pair(p)?;
            let v = dmf(&sigma, &omega)?;
            Reply::new(format!("d={} m={} f={}", v.d, v.m, v.f), to_json(&v))
        }
        BruhatCommand::Chain { pair: p, .. } => {
            let (sigma, omega) = pair(p)?;
            let chain = dm_chain(&sigma, &omega, config.max_steps as usize)?;
            let labels = chain.labels();
            let mut text = if labels.is_empty() { "(empty)".to_string() } else { join(&labels) };
            for e in chain.elements() {
                let len = e.factor().support_bound().max(sigma.prefix_len()) + 1;
                text.push_str(&format!("\n{}", e.pattern().one_line_string(len)));
            }
            text.push_str(&match chain.final_d {
                None => "\nreached target".to_string(),
                Some(d) => format!("\nstopped after {} steps; first difference at {d}", labels.len()),
            });
            let json = to_json(&ChainJson {
                labels: &labels,
                elements: chain.elements().map(|e| e.pattern()).collect(),
                reached_target: chain.reached_target,
                final_d: chain.final_d,
            });
            Reply::new(text, json)
        }
        BruhatCommand::Candidates { pair: p } => {
            let (nu, omega) = pair(p)?;
            if matches!(compare(&nu, &omega, 0).relation, Relation::NotLessOrEqual) {
                return Err(bruhat_core::Error::NotOrdered.into());
            }
            let candidates = relative_candidates(&nu, &omega)?;
            let text = if candidates.is_empty() { "none".to_string() } else { join(&candidates) };
            Reply::new(text, to_json(&candidates))
        }
    })
}

#[derive(Serialize)]
struct ChainJson<'a> {
    labels: &'a [Transposition],
    elements: Vec<&'a PatternPermutation>,
    reached_target: bool,
    final_d: Option<usize>,
}

fn reason_text(reason: NotCoverReason) -> String {
    match reason {
        NotCoverReason::Equal => "the permutations are equal".into(),
        NotCoverReason::NotEventuallyEqual => "the permutations are not eventually equal".into(),
        NotCoverReason::NotATransposition => "they differ by more than one transposition".into(),
        NotCoverReason::GoesDown => "the transposition goes down".into(),
        NotCoverReason::Intermediate { position } => {
            format!("position {position} holds an intermediate value")
        }
    }
}

fn enumerate(p: &Pair) -> Result<IntervalPoset, CliError> {
    let (mu, nu) = pair(p)?;
    Ok(enumerate_between(&mu, &nu)?)
}

fn interval(cmd: &IntervalCommand) -> Result<Reply, CliError> {
    Ok(match cmd {
        IntervalCommand::Enum { pair: p, .. } => {
            let ip = enumerate(p)?;
            let json = to_json(&ip);
            let mut reply = Reply::new(json.clone(), json);
            reply.dot = Some(ip.to_dot());
            reply
        }
        IntervalCommand::Grading { pair: p } => {
            let ip = enumerate(p)?;
            let report = grading_check(&ip);
            let text = match &report.violation {
                None => format!("pass: {} elements, rank {}", ip.len(), ip.rank(ip.top_index())),
                Some(v) => format!("fail: {v:?}"),
            };
            let code = if report.passed { Code::Success } else { Code::Negative };
            Reply::new(text, to_json(&report)).code(code)
        }
        IntervalCommand::Elcheck { pair: p } => {
            let ip = enumerate(p)?;
            let report = el_check(&ip);
            let text = match report.violations.first() {
                None => format!("pass: {} pairs checked", report.pairs_checked),
                Some(v) => format!(
                    "fail: {} violations; first on [{}, {}]: {:?}",
                    report.violations.len(),
                    v.lower,
                    v.upper,
                    v.kind
                ),
            };
            let code = if report.passed { Code::Success } else { Code::Negative };
            Reply::new(text, to_json(&report)).code(code)
        }
        IntervalCommand::Chains { pair: p } => {
            let ip = enumerate(p)?;
            let chains = maximal_chains(&ip);
            let text = chains.iter().map(|c| c.word.to_string()).collect::<Vec<_>>().join("\n");
            Reply::new(text, to_json(&chains))
        }
    })
}

fn complex(cmd: &ComplexCommand, config: &RunConfig) -> Result<Reply, CliError> {
    Ok(match cmd {
        ComplexCommand::Shelling { pair: p } => {
            let ip = enumerate(p)?;
            let (sc, shelling) = lex_shelling_order(&ip)?;
            let text = match shelling.failure_index {
                None => format!("pass: {} facets", sc.facets().len()),
                Some(i) => format!("fail at facet {i} of {}", sc.facets().len()),
            };
            let code = if shelling.passed { Code::Success } else { Code::Negative };
            Reply::new(text, to_json(&shelling)).code(code)
        }
        ComplexCommand::Fhvec { pair: p } => {
            let sc = order_complex(&enumerate(p)?);
            let (f, h) = f_h_vectors(&sc)?;
            Reply::new(format!("f: {}\nh: {}", join(&f), join(&h)), to_json(&json!({ "f": f, "h": h })))
        }
        ComplexCommand::Srideal { pair: p, .. } => {
            let ip = enumerate(p)?;
            let gens = stanley_reisner_generators(&ip);
            let mut reply = Reply::new(ideal_text(&ip, &gens), to_json(&json!({ "generators": gens })));
            reply.m2 = Some(ideal_m2(&ip, &gens));
            reply
        }
        ComplexCommand::Order { pair: p } => {
            let sc = order_complex(&enumerate(p)?);
            let json = to_json(&sc);
            Reply::new(json.clone(), json)
        }
        ComplexCommand::Nested {
            pair: p,
            samples,
            support,
            seed,
            ..
        } => {
            let (sigma, omega) = pair(p)?;
            let mut filtration = build_filtration(&sigma, &omega, config.depth as usize)?;
            let nus = sample_below(&sigma, &omega, *support, *samples, *seed);
            let report = nested_shellability_report(&mut filtration, &nus)?;
            let verdict = |b: bool| if b { "pass" } else { "FAIL" };
            let mut text = String::from("level  size  facets  graded  el    shelling  full\n");
            for l in &report.levels {
                text.push_str(&format!(
                    "{:<6} {:<5} {:<7} {:<7} {:<5} {:<9} {}\n",
                    l.level,
                    l.interval_size,
                    l.facet_count,
                    verdict(l.graded),
                    verdict(l.el_labeling),
                    verdict(l.shelling),
                    l.full_in_next.map_or("-", verdict),
                ));
            }
            if !report.coverage.is_empty() {
                let located = report.coverage.iter().filter(|c| c.verified).count();
                text.push_str(&format!("coverage: {located}/{} samples located\n", report.coverage.len()));
            }
            text.push_str(&format!("overall: {}", verdict(report.passed)));
            let code = if report.passed { Code::Success } else { Code::Negative };
            Reply::new(text, to_json(&report)).code(code)
        }
    })
}
