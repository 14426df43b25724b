use std::time::Duration;

/// Result of a verification run: a titled list of labelled pass/fail checks.
/// The duration is carried for callers that want it but is never part of
/// printed output, which must stay byte-identical between runs.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub items: Vec<ReportItem>,
    pub duration: Duration,
}

#[derive(Clone, Debug)]
pub struct ReportItem {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), items: Vec::new(), duration: Duration::ZERO }
    }

    pub fn push(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.items.push(ReportItem { label: label.into(), pass, detail: detail.into() });
    }

    pub fn check(&mut self, label: impl Into<String>, pass: bool) {
        self.push(label, pass, String::new());
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.items.extend(other.items);
    }
}
