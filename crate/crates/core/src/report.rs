//! Check results and their human and machine renderings.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The computation could not decide; never counts as a failure.
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub tag: String,
    /// Unique within the tag; contains no whitespace or `=`.
    pub id: String,
    pub citation: String,
    pub status: Status,
    pub detail: String,
    /// Every number shown in `detail`, as exact strings.
    pub numbers: Vec<(String, String)>,
}

impl Check {
    pub fn new(tag: &str, id: impl AsRef<str>, citation: impl Into<String>, status: Status) -> Self {
        let id: String = id
            .as_ref()
            .chars()
            .map(|c| match c {
                c if c.is_whitespace() => '_',
                '=' => ':',
                c => c,
            })
            .collect();
        Check {
            tag: tag.to_string(),
            id,
            citation: citation.into(),
            status,
            detail: String::new(),
            numbers: Vec::new(),
        }
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn number(mut self, key: &str, value: impl ToString) -> Self {
        self.numbers.push((key.to_string(), value.to_string()));
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    /// Wall-clock time per group; excluded from the default rendering so
    /// output stays deterministic.
    pub timings: Vec<(String, Duration)>,
    /// Print each check's numbers in the human rendering too.
    pub show_numbers: bool,
    /// Printed after the summary, e.g. a serialized table.
    pub trailer: String,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: Option<u64>) -> Self {
        Report {
            command: command.into(),
            seed,
            ..Report::default()
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Stable sort by tag; checks within a tag keep their order.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.tag.cmp(&b.tag));
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for check in &self.checks {
            match check.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::Inconclusive => c.inconclusive += 1,
            }
        }
        c
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format, timings: bool) -> String {
        match format {
            Format::Human => self.render_human(timings),
            Format::Machine => self.render_machine(timings),
        }
    }

    fn render_human(&self, timings: bool) -> String {
        let mut out = String::new();
        match self.seed {
            Some(seed) => writeln!(out, "leibext {} (seed {seed})", self.command),
            None => writeln!(out, "leibext {}", self.command),
        }
        .unwrap();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            write!(out, "{status:<5} {}/{}", c.tag, c.id).unwrap();
            if !c.detail.is_empty() {
                write!(out, ": {}", c.detail).unwrap();
            }
            out.push('\n');
            if self.show_numbers {
                for (k, v) in &c.numbers {
                    writeln!(out, "      {k} = {v}").unwrap();
                }
            }
            if c.status == Status::Fail && !c.citation.is_empty() {
                writeln!(out, "      see {}", c.citation).unwrap();
            }
        }
        if timings {
            for (group, d) in &self.timings {
                writeln!(out, "time {group}: {} ms", d.as_millis()).unwrap();
            }
        }
        let n = self.counts();
        writeln!(out, "{} passed, {} failed, {} inconclusive", n.pass, n.fail, n.inconclusive).unwrap();
        out.push_str(&self.trailer);
        out
    }

    fn render_machine(&self, timings: bool) -> String {
        let mut out = String::new();
        writeln!(out, "command={}", self.command).unwrap();
        if let Some(seed) = self.seed {
            writeln!(out, "seed={seed}").unwrap();
        }
        for c in &self.checks {
            let key = format!("check.{}.{}", c.tag, c.id);
            writeln!(out, "{key}.status={}", c.status.as_str()).unwrap();
            if !c.citation.is_empty() {
                writeln!(out, "{key}.citation={}", c.citation).unwrap();
            }
            for (k, v) in &c.numbers {
                writeln!(out, "{key}.{k}={v}").unwrap();
            }
        }
        if timings {
            for (group, d) in &self.timings {
                writeln!(out, "time.{group}.ms={}", d.as_millis()).unwrap();
            }
        }
        let n = self.counts();
        writeln!(out, "summary.pass={}", n.pass).unwrap();
        writeln!(out, "summary.fail={}", n.fail).unwrap();
        writeln!(out, "summary.inconclusive={}", n.inconclusive).unwrap();
        out.push_str(&self.trailer);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_ignores_inconclusive() {
        let mut r = Report::new("verify", Some(1));
        r.push(Check::new("b", "x", "", Status::Pass));
        r.push(Check::new("a", "y z=1", "", Status::Inconclusive));
        assert_eq!(r.exit_code(), 0);
        r.sort();
        assert_eq!(r.checks[0].id, "y_z:1");
        let machine = r.render(Format::Machine, false);
        assert!(machine.contains("check.a.y_z:1.status=inconclusive"));
        assert!(machine.ends_with("summary.inconclusive=1\n"));
        r.push(Check::new("c", "w", "somewhere", Status::Fail));
        assert_eq!(r.exit_code(), 1);
        assert!(r.render(Format::Human, false).contains("see somewhere"));
    }
}
