//! Static, self-contained HTML rendering of reports.

use std::fmt::Write;

use super::{CorpusSummary, EvaluationReport};
use crate::align::{OperationKind, RouteElement};
use crate::classify::ErrorClass;
use crate::metrics::AspectScore;
use crate::token::Token;

const STYLE: &str = r#"
body { font-family: system-ui, sans-serif; margin: 2rem; color: #222; }
table { border-collapse: collapse; margin-bottom: 1.5rem; }
td, th { border: 1px solid #ccc; padding: .25rem .6rem; text-align: right; }
th:first-child, td:first-child { text-align: left; }
.route { line-height: 2.4; font-size: 1.05rem; }
.route span { padding: .1rem .25rem; border-radius: 3px; }
.del { text-decoration: line-through; background: #f8d0d0; }
.ins { text-decoration: underline; background: #cfe8cf; }
.compound { border-bottom: 2px dotted #555; }
.normalised { box-shadow: inset 0 -2px 0 #8a6fd1; }
.punctuation_error { background: #ffe39a; }
.capitalisation_error { background: #bfe3ff; }
.number_error { background: #ffc9a8; }
.compound_error { background: #e5e5e5; }
.prefix_error, .suffix_error, .affix_error { background: #f2c7ef; }
.stem_error { background: #d9c9ff; }
.homophone_error { background: #c8f0e6; }
.word_error { background: #f5a3a3; }
.legend span { margin-right: .6rem; padding: .1rem .3rem; }
"#;

/// Escapes text for use in element content and attribute values.
pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            c => out.push(c),
        }
    }
    out
}

fn page(title: &str, body: &str) -> String {
    format!(
        "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>{}</title>\n<style>{STYLE}</style>\n</head>\n<body>\n{body}</body>\n</html>\n",
        escape(title)
    )
}

fn rate(r: Option<f64>) -> String {
    r.map_or_else(|| "undefined".to_string(), |r| format!("{r:.4}"))
}

fn metrics_table(rows: &[(&str, &AspectScore)]) -> String {
    let mut out = String::from("<table>\n<tr><th>aspect</th><th>error rate</th><th>F1</th><th>C</th><th>S</th><th>D</th><th>I</th></tr>\n");
    for (name, s) in rows {
        let c = s.counts;
        let _ = writeln!(
            out,
            "<tr><td>{name}</td><td>{}</td><td>{:.4}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td></tr>",
            rate(s.error_rate),
            s.f1,
            c.correct,
            c.substitutions,
            c.deletions,
            c.insertions
        );
    }
    out.push_str("</table>\n");
    out
}

fn tooltip(e: &RouteElement) -> String {
    let mut lines = vec![format!("{} (cost {})", e.op.name(), e.cost)];
    let mut describe = |side: &str, t: &Option<Token>| {
        if let Some(t) = t {
            let mut line = format!("{side}: {:?} → {:?}", t.raw.trim(), t.value);
            if !t.normalisations.is_empty() {
                let trail: Vec<&str> = t.normalisations.iter().map(|n| n.name()).collect();
                let _ = write!(line, " [{}]", trail.join(", "));
            }
            lines.push(line);
        }
    };
    describe("ref", &e.reference);
    describe("hyp", &e.hypothesis);
    if let Some(class) = e.error_class {
        lines.push(class.name().to_string());
    }
    escape(&lines.join("\n"))
}

fn element_html(e: &RouteElement) -> String {
    let value = |t: &Option<Token>| t.as_ref().map(|t| escape(&t.value)).unwrap_or_default();
    let normalised = [&e.reference, &e.hypothesis]
        .iter()
        .any(|t| t.as_ref().is_some_and(Token::is_normalised));
    let mut classes: Vec<&str> = Vec::new();
    let text = match e.op {
        OperationKind::Ok => value(&e.reference),
        OperationKind::Deletion => {
            classes.push("del");
            value(&e.reference)
        }
        OperationKind::Insertion => {
            classes.push("ins");
            value(&e.hypothesis)
        }
        OperationKind::Substitution => format!("{} → {}", value(&e.reference), value(&e.hypothesis)),
        OperationKind::CompoundRef => {
            classes.push("compound");
            value(&e.reference)
        }
        OperationKind::CompoundHyp => {
            classes.push("compound");
            format!("+{}", value(&e.hypothesis))
        }
        OperationKind::CompoundEnd => {
            classes.push("compound");
            format!("{} ≈ {}", value(&e.reference), value(&e.hypothesis))
        }
    };
    if let Some(class) = e.error_class {
        classes.push(class.name());
    }
    if normalised {
        classes.push("normalised");
    }
    format!("<span class=\"{}\" title=\"{}\">{text}</span>", classes.join(" "), tooltip(e))
}

fn legend() -> String {
    let mut out = String::from("<p class=\"legend\">");
    for class in ErrorClass::ALL {
        let _ = write!(out, "<span class=\"{0}\">{0}</span>", class.name());
    }
    out.push_str("<span class=\"del\">deletion</span><span class=\"ins\">insertion</span></p>\n");
    out
}

/// Renders one pair: metrics, per-class counts and the colour-coded route.
pub fn render_report(report: &EvaluationReport, title: &str) -> String {
    let m = &report.metrics;
    let mut body = format!("<h1>{}</h1>\n", escape(title));
    body.push_str(&metrics_table(&[("word", &m.word), ("punctuation", &m.punctuation), ("capitalisation", &m.capitalisation)]));
    let _ = writeln!(body, "<p>legacy WER: {}</p>", rate(report.legacy_wer));
    if !m.errors.is_empty() {
        body.push_str("<table>\n<tr><th>error class</th><th>count</th></tr>\n");
        for (class, n) in &m.errors {
            let _ = writeln!(body, "<tr><td class=\"{0}\">{0}</td><td>{n}</td></tr>", class.name());
        }
        body.push_str("</table>\n");
    }
    if !m.normalisations.is_empty() {
        body.push_str("<table>\n<tr><th>normaliser</th><th>tokens</th></tr>\n");
        for (id, n) in &m.normalisations {
            let _ = writeln!(body, "<tr><td>{}</td><td>{n}</td></tr>", id.name());
        }
        body.push_str("</table>\n");
    }
    body.push_str(&legend());
    body.push_str("<div class=\"route\">\n");
    for e in &report.route {
        body.push_str(&element_html(e));
        body.push('\n');
    }
    body.push_str("</div>\n");
    page(title, &body)
}

/// Renders a corpus summary with one row per evaluated pair.
pub fn render_summary(summary: &CorpusSummary, reports: &[(String, EvaluationReport)]) -> String {
    let m = &summary.micro;
    let mut body = String::from("<h1>Corpus summary</h1>\n");
    let _ = writeln!(body, "<p>{} pairs evaluated, {} failed</p>", summary.pairs, summary.failures.len());
    body.push_str("<h2>Pooled</h2>\n");
    body.push_str(&metrics_table(&[("word", &m.word), ("punctuation", &m.punctuation), ("capitalisation", &m.capitalisation)]));
    body.push_str("<h2>Per pair</h2>\n<table>\n<tr><th>id</th><th>WER</th><th>punct SER</th><th>punct F1</th><th>cap SER</th><th>cap F1</th><th>legacy WER</th></tr>\n");
    for (id, r) in reports {
        let m = &r.metrics;
        let _ = writeln!(
            body,
            "<tr><td>{}</td><td>{}</td><td>{}</td><td>{:.4}</td><td>{}</td><td>{:.4}</td><td>{}</td></tr>",
            escape(id),
            rate(m.wer),
            rate(m.punct_ser),
            m.punct_f1,
            rate(m.cap_ser),
            m.cap_f1,
            rate(r.legacy_wer)
        );
    }
    body.push_str("</table>\n");
    if !summary.failures.is_empty() {
        body.push_str("<h2>Failures</h2>\n<ul>\n");
        for f in &summary.failures {
            let _ = writeln!(body, "<li>{}: {}</li>", escape(&f.id), escape(&f.message));
        }
        body.push_str("</ul>\n");
    }
    page("Corpus summary", &body)
}
