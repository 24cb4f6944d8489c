use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde_json::{json, Value};
use smoothwords::characterize::{
    case_table, classify, exhaustive_directive_search, find_case, match_survivors, reference_alphabets, verify_case,
    verify_parity_lemmas, CaseInstance, CaseReport, VerifyOptions,
};
use smoothwords::lyndon::{check_lyndon_prefix, DEFAULT_CHECK_CAP};
use smoothwords::{
    decode, delta_chain, derivative, duval_factorize, encode, lyndon_witness, phi, phi_inverse_prefix,
    right_derivative, stream_factorize, Letter, LyndonFactorization, LyndonVerdict, OrderedAlphabet, Terminal, Word,
};

use crate::source::{StreamArgs, WordArgs};
use crate::{CheckInput, Cli, Command, DeltaMode, VerifyArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] smoothwords::Error),
    #[error("reading input: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) | CliError::Io(_) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        match s {
            Status::Ok => ExitCode::SUCCESS,
            Status::Mismatch => ExitCode::from(3),
        }
    }
}

/// One result, rendered as a text line (or block) and as JSON.
struct Item {
    text: String,
    json: Value,
}

struct Output {
    items: Vec<Item>,
    /// Print the lone item's JSON rather than an array.
    single: bool,
    /// Text-only closing line.
    footer: Option<String>,
    status: Status,
}

impl Output {
    fn one(text: String, json: Value) -> Output {
        Output { items: vec![Item { text, json }], single: true, footer: None, status: Status::Ok }
    }

    fn print(self, as_json: bool) -> Status {
        if as_json {
            let doc = if self.single && self.items.len() == 1 {
                self.items.into_iter().next().unwrap().json
            } else {
                Value::Array(self.items.into_iter().map(|i| i.json).collect())
            };
            println!("{doc}");
        } else {
            for item in self.items {
                println!("{}", item.text);
            }
            if let Some(footer) = self.footer {
                println!("{footer}");
            }
        }
        self.status
    }
}

pub fn run(cli: Cli) -> Result<Status, CliError> {
    let out = match cli.command {
        Command::Generate { stream, length } => generate(&stream, length)?,
        Command::Delta { words, alphabet, mode, times } => delta(&words, alphabet, mode, times)?,
        Command::DeltaInv { words, alphabet, first } => delta_inv(&words, alphabet, first)?,
        Command::Phi { words, alphabet } => per_word(&words, |w| phi(w, alphabet))?,
        Command::PhiInv { words, alphabet } => per_word(&words, |w| phi_inverse_prefix(w, alphabet))?,
        Command::Factorize { input } => factorize(&input)?,
        Command::CheckLyndon { input, budget } => check(&input, budget)?,
        Command::Classify { alphabet, depth, budget } => classify_cmd(alphabet, depth, budget)?,
        Command::VerifyPaper(args) => verify(&args)?,
        Command::Lemmas { alphabet, length, samples, seed } => lemmas(alphabet, length, samples, seed)?,
    };
    Ok(out.print(cli.json))
}

fn alphabet_json(a: OrderedAlphabet) -> Value {
    json!([a.a(), a.b()])
}

fn generate(stream: &StreamArgs, length: usize) -> Result<Output, CliError> {
    let mut s = stream.open()?;
    let w = s.prefix(length);
    Ok(Output::one(w.to_string(), json!({ "word": w.to_string() })))
}

fn per_word(words: &WordArgs, f: impl Fn(&Word) -> smoothwords::Result<Word>) -> Result<Output, CliError> {
    let mut items = Vec::new();
    for w in words.read()? {
        let r = f(&w)?;
        items.push(Item { text: r.to_string(), json: json!({ "input": w.to_string(), "output": r.to_string() }) });
    }
    Ok(Output { items, single: words.is_literal(), footer: None, status: Status::Ok })
}

fn terminal_name(t: Terminal) -> &'static str {
    match t {
        Terminal::SingleLetter => "single-letter",
        Terminal::LeftAlphabet => "left-alphabet",
        Terminal::Empty => "empty",
    }
}

fn delta(
    words: &WordArgs,
    alphabet: Option<OrderedAlphabet>,
    mode: DeltaMode,
    times: usize,
) -> Result<Output, CliError> {
    let need =
        |a: Option<OrderedAlphabet>| a.ok_or_else(|| CliError::Usage("--alphabet is required for this mode".into()));
    match mode {
        DeltaMode::Delta => per_word(words, |w| Ok((0..times).fold(w.clone(), |x, _| encode(&x)))),
        DeltaMode::Right => {
            let a = need(alphabet)?;
            per_word(words, |w| Ok((0..times).fold(w.clone(), |x, _| right_derivative(&x, a))))
        }
        DeltaMode::Trim => {
            let a = need(alphabet)?;
            per_word(words, |w| Ok((0..times).fold(w.clone(), |x, _| derivative(&x, a))))
        }
        DeltaMode::Chain => {
            let a = need(alphabet)?;
            let mut items = Vec::new();
            for w in words.read()? {
                let chain = delta_chain(&w, a);
                let levels: Vec<String> = chain.levels.iter().map(Word::to_string).collect();
                let terminal = terminal_name(chain.terminal);
                items.push(Item {
                    text: format!("{}\nterminal: {terminal}", levels.join("\n")),
                    json: json!({ "levels": levels, "terminal": terminal }),
                });
            }
            Ok(Output { items, single: words.is_literal(), footer: None, status: Status::Ok })
        }
    }
}

fn delta_inv(words: &WordArgs, alphabet: OrderedAlphabet, first: u32) -> Result<Output, CliError> {
    let second = alphabet.complement_of(first).ok_or(smoothwords::Error::NotInAlphabet { letter: first, alphabet })?;
    let (alpha, beta) = (Letter::new(first)?, Letter::new(second)?);
    per_word(words, |w| decode(w, alpha, beta))
}

fn factorization_item(f: &LyndonFactorization) -> Item {
    let factors: Vec<String> = f.factors.iter().map(Word::to_string).collect();
    Item { text: f.to_string(), json: json!({ "factors": factors, "complete": f.complete }) }
}

/// The finite word, or the opened stream and the requested prefix length.
enum Subject {
    Finite(Word),
    Stream(smoothwords::PrefixStream, usize),
}

fn subject(input: &CheckInput) -> Result<Subject, CliError> {
    match (&input.word, input.stream.is_set()) {
        (Some(_), true) => Err(CliError::Usage("--word conflicts with a stream source".into())),
        (Some(w), false) => {
            if input.length.is_some() {
                return Err(CliError::Usage("-n applies to streams only".into()));
            }
            Ok(Subject::Finite(w.trim().parse()?))
        }
        (None, _) => {
            input.stream.validate()?;
            let n = input.length.ok_or_else(|| CliError::Usage("-n is required with a stream source".into()))?;
            Ok(Subject::Stream(input.stream.open()?, n))
        }
    }
}

fn factorize(input: &CheckInput) -> Result<Output, CliError> {
    let f = match subject(input)? {
        Subject::Finite(w) => duval_factorize(&w),
        Subject::Stream(mut s, n) => stream_factorize(&mut s, n)?,
    };
    let item = factorization_item(&f);
    Ok(Output::one(item.text, item.json))
}

fn check(input: &CheckInput, budget: Option<usize>) -> Result<Output, CliError> {
    let cap = budget.unwrap_or(DEFAULT_CHECK_CAP);
    if let Some(n) = input.length.filter(|&n| n > cap) {
        return Err(CliError::Usage(format!("-n {n} exceeds the limit {cap}; raise it with --budget")));
    }
    match subject(input)? {
        Subject::Finite(w) => {
            if w.len() > cap {
                return Err(CliError::Usage(format!(
                    "word of length {} exceeds the limit {cap}; raise it with --budget",
                    w.len()
                )));
            }
            let witness = lyndon_witness(&w)?;
            let text = match witness {
                None => "lyndon".to_string(),
                Some(i) => format!("not lyndon: suffix at {i} is smaller"),
            };
            Ok(Output::one(
                text,
                json!({ "word": w.to_string(), "lyndon": witness.is_none(), "suffix_index": witness }),
            ))
        }
        Subject::Stream(mut s, n) => {
            let verdict = check_lyndon_prefix(&mut s, n)?;
            let json = match verdict {
                LyndonVerdict::ConsistentUpTo(n) => json!({ "verdict": "consistent", "length": n }),
                LyndonVerdict::Violation { suffix_index, decided_at } => json!({
                    "verdict": "violation",
                    "length": n,
                    "suffix_index": suffix_index,
                    "decided_at": decided_at,
                }),
            };
            Ok(Output::one(verdict.to_string(), json))
        }
    }
}

fn classify_cmd(alphabet: OrderedAlphabet, depth: Option<usize>, budget: usize) -> Result<Output, CliError> {
    let c = classify(alphabet);
    let families: Vec<String> = c.lyndon_families.iter().map(ToString::to_string).collect();
    let mut text =
        format!("{alphabet}: {}", if families.is_empty() { "none".to_string() } else { families.join(", ") });
    let mut json = json!({ "alphabet": alphabet_json(alphabet), "families": families });
    let mut status = Status::Ok;
    if let Some(depth) = depth {
        let outcomes = exhaustive_directive_search(alphabet, depth, budget)?;
        let (hit, unmatched) = match_survivors(alphabet, &outcomes);
        let survivors: Vec<String> = outcomes.iter().filter(|o| o.survives()).map(|o| o.prefix.to_string()).collect();
        let agrees = unmatched.is_empty() && hit == c.lyndon_families;
        if !agrees {
            status = Status::Mismatch;
        }
        text.push_str(&format!(
            "\nsearch depth {depth}, budget {budget}: survivors [{}] {}",
            survivors.join(" "),
            if agrees { "agree" } else { "DISAGREE" }
        ));
        json["search"] = json!({
            "depth": depth,
            "budget": budget,
            "survivors": survivors,
            "agrees": agrees,
        });
    }
    Ok(Output { items: vec![Item { text, json }], single: true, footer: None, status })
}

fn selected_cases(args: &VerifyArgs) -> Result<Vec<CaseInstance>, CliError> {
    let alphabets = match args.alphabet {
        Some(a) => vec![a],
        None => reference_alphabets(),
    };
    let mut cases = Vec::new();
    if args.selection.all {
        for &a in &alphabets {
            cases.extend(case_table(a)?);
        }
        return Ok(cases);
    }
    for id in &args.selection.cases {
        let spec = find_case(id).ok_or_else(|| CliError::Usage(format!("unknown case `{id}`")))?;
        match args.alphabet {
            Some(a) => cases.push(spec.instantiate(a)?),
            None => {
                for &a in alphabets.iter().filter(|&&a| spec.applies_to(a)) {
                    cases.push(spec.instantiate(a)?);
                }
            }
        }
    }
    Ok(cases)
}

/// Runs the cases on `jobs` threads; reports come back in input order.
fn run_pool(cases: &[CaseInstance], options: &VerifyOptions, jobs: usize) -> Result<Vec<CaseReport>, CliError> {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<smoothwords::Result<CaseReport>>>> = Mutex::new(vec![None; cases.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, cases.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(case) = cases.get(i) else { break };
                let r = verify_case(case, options);
                results.lock().unwrap()[i] = Some(r);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every case is taken by a worker").map_err(CliError::from))
        .collect()
}

fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    if args.jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be positive".into()));
    }
    let mut options = VerifyOptions::default();
    if let Some(b) = args.budget {
        options.max_budget = b;
        options.initial_budget = options.initial_budget.min(b);
    }
    let cases = selected_cases(args)?;
    let jobs = args.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let reports = run_pool(&cases, &options, jobs)?;
    let mismatches = reports.iter().filter(|r| !r.matches_claim()).count();
    Ok(Output {
        items: reports.iter().map(report_item).collect(),
        single: false,
        footer: Some(format!("{} cases, {mismatches} mismatches", reports.len())),
        status: if mismatches == 0 { Status::Ok } else { Status::Mismatch },
    })
}

fn report_item(r: &CaseReport) -> Item {
    let ms = r.elapsed.as_millis() as u64;
    let mark = if r.matches_claim() { "ok" } else { "MISMATCH" };
    let position = r.witness_position.map_or("-".to_string(), |p| p.to_string());
    Item {
        text: format!(
            "{mark} {} {} {} witness={position} expanded={} {ms}ms",
            r.case_id,
            r.alphabet,
            r.verdict.label(),
            r.expanded_length
        ),
        json: json!({
            "case_id": r.case_id,
            "alphabet": alphabet_json(r.alphabet),
            "verdict": r.verdict.label(),
            "witness_position": r.witness_position,
            "expanded_length": r.expanded_length,
            "elapsed_ms": ms,
        }),
    }
}

fn lemmas(alphabet: OrderedAlphabet, length: usize, samples: usize, seed: u64) -> Result<Output, CliError> {
    let r = verify_parity_lemmas(alphabet, length, samples, seed)?;
    let pass = r.passes();
    let text = format!(
        "{alphabet} n={length}: {} blocks, {} misplaced, {} long b-blocks, {}+{} pairs, {} order failures: {}",
        r.blocks_checked,
        r.misplaced_blocks.len(),
        r.long_b_blocks.len(),
        r.pairs_checked[0],
        r.pairs_checked[1],
        r.order_failures,
        if pass { "pass" } else { "FAIL" }
    );
    let json = json!({
        "alphabet": alphabet_json(alphabet),
        "length": length,
        "seed": seed,
        "blocks_checked": r.blocks_checked,
        "misplaced_blocks": r.misplaced_blocks,
        "long_b_blocks": r.long_b_blocks,
        "pairs_checked": r.pairs_checked,
        "order_failures": r.order_failures,
        "passes": pass,
    });
    Ok(Output {
        items: vec![Item { text, json }],
        single: true,
        footer: None,
        status: if pass { Status::Ok } else { Status::Mismatch },
    })
}
