//! Verdict table over the two post-quantum theories, each cell tied to a claim.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "✓")]
    Yes,
    #[serde(rename = "?")]
    Open,
    #[serde(rename = "×")]
    No,
}

impl Verdict {
    pub fn symbol(self) -> &'static str {
        match self {
            Verdict::Yes => "✓",
            Verdict::Open => "?",
            Verdict::No => "×",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub verdict: Verdict,
    pub claim: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub footnote: Option<u8>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub desideratum: &'static str,
    pub density_cubes: Cell,
    pub quartic_quantum_theory: Cell,
}

#[derive(Debug, Clone, Serialize)]
pub struct Checklist {
    pub rows: Vec<Row>,
    pub footnotes: Vec<(u8, &'static str)>,
}

const fn cell(verdict: Verdict, claim: &'static str, footnote: Option<u8>) -> Cell {
    Cell {
        verdict,
        claim,
        footnote,
    }
}

pub fn checklist() -> Checklist {
    use Verdict::{No, Open, Yes};
    let row = |desideratum, density_cubes, quartic_quantum_theory| Row {
        desideratum,
        density_cubes,
        quartic_quantum_theory,
    };
    Checklist {
        rows: vec![
            row("States", cell(Yes, "DC-CV", Some(1)), cell(Yes, "QQT-STATE-MIXED", None)),
            row("Effects", cell(Yes, "DC-CV-POS", None), cell(Yes, "QQT-EFFECT-N00", None)),
            row(
                "Transformations",
                cell(Open, "DC-TP-NONHERM", Some(2)),
                cell(Yes, "QQT-UNITARY", None),
            ),
            row("Composite systems", cell(No, "DC-PARAMS", None), cell(Open, "QQT-SWAP", Some(3))),
            row(
                "Higher-order interference",
                cell(Yes, "DC-THIRD-ORDER", None),
                cell(Open, "QQT-I3", Some(4)),
            ),
            row("Hyperdecoherence", cell(Yes, "DC-ADJOINT", None), cell(Yes, "QQT-HD", None)),
        ],
        footnotes: vec![
            (1, "Valid states exist, but the constraints admit incompatible state spaces (see DC-CV)."),
            (2, "The stated transformation rules admit maps that send Hermitian cubes to non-Hermitian ones."),
            (3, "Swapping subsystems leaves the state space; composites are only sensible with local transformations."),
            (4, "Interference of every order appears, because the slit effects are not fixed by the screen effect."),
        ],
    }
}

fn cell_text(c: &Cell) -> String {
    match c.footnote {
        Some(n) => format!("{}{} ({})", c.verdict.symbol(), n, c.claim),
        None => format!("{} ({})", c.verdict.symbol(), c.claim),
    }
}

impl Checklist {
    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| Desideratum | Density cubes | Quartic quantum theory |\n|---|---|---|\n",
        );
        for r in &self.rows {
            writeln!(
                out,
                "| {} | {} | {} |",
                r.desideratum,
                cell_text(&r.density_cubes),
                cell_text(&r.quartic_quantum_theory)
            )
            .expect("writing to a String");
        }
        out.push('\n');
        for (n, text) in &self.footnotes {
            writeln!(out, "{n}. {text}").expect("writing to a String");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("checklist serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::find;

    #[test]
    fn every_cell_cites_a_registered_claim() {
        for r in checklist().rows {
            for c in [&r.density_cubes, &r.quartic_quantum_theory] {
                assert!(find(c.claim).is_some(), "{}", c.claim);
            }
        }
    }

    #[test]
    fn open_cells_carry_footnotes() {
        let list = checklist();
        for r in &list.rows {
            for c in [&r.density_cubes, &r.quartic_quantum_theory] {
                if c.verdict == Verdict::Open {
                    let n = c.footnote.expect("footnote");
                    assert!(list.footnotes.iter().any(|(k, _)| *k == n));
                }
            }
        }
    }

    #[test]
    fn known_cells() {
        let list = checklist();
        let row = |name: &str| list.rows.iter().find(|r| r.desideratum == name).unwrap();
        assert_eq!(row("Transformations").density_cubes.verdict, Verdict::Open);
        assert_eq!(row("Composite systems").density_cubes.verdict, Verdict::No);
        assert_eq!(row("Composite systems").quartic_quantum_theory.verdict, Verdict::Open);
        assert_eq!(row("Hyperdecoherence").quartic_quantum_theory.verdict, Verdict::Yes);
        assert!(list.to_markdown().contains("| Transformations | ?2 (DC-TP-NONHERM) |"));
    }
}
