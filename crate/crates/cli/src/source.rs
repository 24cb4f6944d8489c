//! Where words come from: a stream described by flags, or literal words.

use std::io::BufRead;

use clap::{Args, ValueEnum};
use smoothwords::{
    delta1_inverse_stream, kolakoski, maximal_word, minimal_word, stream_from_directive, DirectiveSequence,
    OrderedAlphabet, PrefixStream, Word,
};

use crate::commands::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Extremal {
    Min,
    Max,
}

#[derive(Debug, Args)]
#[group(id = "source", multiple = false)]
pub struct SourceArgs {
    /// Kolakoski word with the given first two letters, e.g. `2,1`.
    #[arg(long, value_parser = parse_pair)]
    pub kolakoski: Option<(u32, u32)>,
    /// Directive sequence `PRE:PERIOD`.
    #[arg(long)]
    pub directive: Option<DirectiveSequence>,
    /// Smallest or largest smooth word.
    #[arg(long, value_enum)]
    pub extremal: Option<Extremal>,
}

#[derive(Debug, Args)]
pub struct StreamArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub alphabet: Option<OrderedAlphabet>,
    /// Apply `Δ_1⁻¹` to the selected word.
    #[arg(long)]
    pub delta1_inverse: bool,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// The input word; without it, one word per line is read from standard input.
    #[arg(long)]
    pub word: Option<String>,
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(x)?, parse(y)?))
}

impl StreamArgs {
    pub fn is_set(&self) -> bool {
        let s = &self.source;
        s.kolakoski.is_some() || s.directive.is_some() || s.extremal.is_some()
    }

    /// Checks the flag combination without building anything.
    pub fn validate(&self) -> Result<(), CliError> {
        let s = &self.source;
        if !self.is_set() {
            return Err(CliError::Usage("one of --kolakoski, --directive or --extremal is required".into()));
        }
        if s.kolakoski.is_some() {
            if self.alphabet.is_some() {
                return Err(CliError::Usage("--kolakoski determines the alphabet; drop --alphabet".into()));
            }
        } else if self.alphabet.is_none() {
            return Err(CliError::Usage("--alphabet is required with --directive and --extremal".into()));
        }
        Ok(())
    }

    pub fn open(&self) -> Result<PrefixStream, CliError> {
        self.validate()?;
        let s = &self.source;
        let stream = match (s.kolakoski, &s.directive, s.extremal, self.alphabet) {
            (Some((x, y)), ..) => kolakoski(x, y)?,
            (_, Some(d), _, Some(alphabet)) => stream_from_directive(d, alphabet)?,
            (.., Some(Extremal::Min), Some(alphabet)) => minimal_word(alphabet)?,
            (.., Some(Extremal::Max), Some(alphabet)) => maximal_word(alphabet)?,
            _ => unreachable!("checked by validate"),
        };
        Ok(if self.delta1_inverse { delta1_inverse_stream(stream)? } else { stream })
    }
}

impl WordArgs {
    /// The flag value, or every nonblank line of standard input.
    pub fn read(&self) -> Result<Vec<Word>, CliError> {
        match &self.word {
            Some(w) => Ok(vec![w.trim().parse()?]),
            None => {
                let mut out = Vec::new();
                for line in std::io::stdin().lock().lines() {
                    let line = line?;
                    if !line.trim().is_empty() {
                        out.push(line.trim().parse()?);
                    }
                }
                Ok(out)
            }
        }
    }

    pub fn is_literal(&self) -> bool {
        self.word.is_some()
    }
}
