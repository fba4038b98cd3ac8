//! Harness for the acceptance run: each criterion returns an [`Outcome`] and
//! [`run`] prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

#[derive(Debug, Default)]
pub struct Outcome {
    pub failed: bool,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn new() -> Self {
        Outcome::default()
    }

    pub fn check(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.failed = true;
            self.notes.push(format!("FAILED {}", note.into()));
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub budget: Duration,
    pub run: fn() -> Outcome,
}

/// Runs every criterion in order; a criterion over its time budget fails.
pub fn run(criteria: &[Criterion]) -> ExitCode {
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let took = start.elapsed();
        if took > c.budget {
            outcome.check(false, format!("runtime {took:.2?} exceeds {:?}", c.budget));
        }
        let status = if outcome.failed { "FAIL" } else { "PASS" };
        println!("{status} criterion {}: {} ({took:.2?})", c.number, c.title);
        for note in &outcome.notes {
            println!("    {note}");
        }
        failed += usize::from(outcome.failed);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_records_failures() {
        let mut o = Outcome::new();
        o.check(true, "fine");
        assert!(!o.failed && o.notes.is_empty());
        o.check(false, "broken");
        assert!(o.failed);
        assert_eq!(o.notes, ["FAILED broken"]);
    }
}
