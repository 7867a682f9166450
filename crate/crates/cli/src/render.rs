//! Markdown, CSV and JSON renderings of command results.

use serde::Serialize;

use nda_core::laws::MachineInfinityReport;
use nda_core::{Error, LawVerdict, Relation, Result};

use crate::{Common, Format, Op, OperationTable, RelationsReport};

fn json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Io(e.to_string()))
}

fn csv_rows<I, R>(rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

fn op_symbol(op: Op, unicode: bool) -> &'static str {
    match (op, unicode) {
        (Op::Add, true) => "⊕",
        (Op::Add, false) => "+",
        (Op::Mul, true) => "⊙",
        (Op::Mul, false) => "*",
    }
}

fn relation_symbol(r: Relation, unicode: bool) -> &'static str {
    if unicode {
        return r.symbol();
    }
    match r {
        Relation::Le => "<=",
        Relation::Lt => "<",
        Relation::MuchLess => "<<",
        Relation::MuchMuchLess => "<<<",
    }
}

pub fn table(t: &OperationTable, c: &Common) -> Result<String> {
    let fmt = c.element_format();
    let header = |first: String| std::iter::once(first).chain((0..=t.bound).map(|b| b.to_string()));
    match c.format {
        Format::Json => json(t),
        Format::Csv => csv_rows(
            std::iter::once(header(format!("{:?}", t.op).to_lowercase()).collect::<Vec<_>>())
                .chain(t.rows.iter().enumerate().map(|(a, row)| {
                    std::iter::once(a.to_string())
                        .chain(row.iter().cloned())
                        .collect()
                })),
        ),
        Format::Markdown => {
            let mut out = format!("Operation table of `{}`, [0, {}]\n\n", t.gen, t.bound);
            let head: Vec<String> = std::iter::once(op_symbol(t.op, c.unicode).to_string())
                .chain((0..=t.bound).map(|b| fmt.format(&b)))
                .collect();
            out += &format!("| {} |\n", head.join(" | "));
            out += &format!("|{}\n", "---|".repeat(head.len()));
            for (a, row) in t.rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|v| fmt.format(v)).collect();
                out += &format!("| {} | {} |\n", fmt.format(&a), cells.join(" | "));
            }
            Ok(out)
        }
    }
}

fn witness_text(v: &LawVerdict) -> String {
    v.witness
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn laws(verdicts: &[LawVerdict], c: &Common) -> Result<String> {
    match c.format {
        Format::Json => json(verdicts),
        Format::Csv => csv_rows(
            std::iter::once(
                ["law_id", "gen", "bound", "holds", "witness", "notes"]
                    .map(String::from)
                    .to_vec(),
            )
            .chain(verdicts.iter().map(|v| {
                vec![
                    v.law_id.to_string(),
                    v.gen.clone(),
                    v.bound.to_string(),
                    v.holds.to_string(),
                    witness_text(v),
                    v.notes.clone(),
                ]
            })),
        ),
        Format::Markdown => {
            let fmt = c.element_format();
            let mut out = String::new();
            if let Some(first) = verdicts.first() {
                out += &format!("Laws of `{}` on [0, {}]\n\n", first.gen, first.bound);
            }
            out += "| law | holds | witness | notes |\n|---|---|---|---|\n";
            for v in verdicts {
                let witness: Vec<String> = v.witness.iter().map(|w| fmt.format(w)).collect();
                out += &format!(
                    "| {} | {} | {} | {} |\n",
                    v.law_id,
                    if v.holds { "yes" } else { "no" },
                    witness.join(", "),
                    v.notes.replace('|', "\\|")
                );
            }
            let failed = verdicts.iter().filter(|v| !v.holds).count();
            out += &format!(
                "\n{} of {} laws hold\n",
                verdicts.len() - failed,
                verdicts.len()
            );
            Ok(out)
        }
    }
}

pub fn relations(r: &RelationsReport, c: &Common) -> Result<String> {
    match c.format {
        Format::Json => json(r),
        Format::Csv => csv_rows(
            std::iter::once(vec!["a".to_string(), "b".to_string()]).chain(
                r.pairs
                    .iter()
                    .map(|(a, b)| vec![a.to_string(), b.to_string()]),
            ),
        ),
        Format::Markdown => {
            let fmt = c.element_format();
            let sym = relation_symbol(r.relation, c.unicode);
            let mut out = format!("`{sym}` on `{}`, [0, {}]\n\n## Chains\n\n", r.gen, r.bound);
            if r.chains.is_empty() {
                out += "none\n";
            }
            for &(s, e) in &r.chains {
                let links: Vec<String> = (s..=e).map(|x| fmt.format(&x)).collect();
                out += &format!("- {}\n", links.join(&format!(" {sym} ")));
            }
            out += &format!("\n## Pairs ({})\n\n| a | b |\n|---|---|\n", r.pairs.len());
            for (a, b) in &r.pairs {
                out += &format!("| {} | {} |\n", fmt.format(a), fmt.format(b));
            }
            Ok(out)
        }
    }
}

pub fn demo(r: &MachineInfinityReport, c: &Common) -> Result<String> {
    match c.format {
        Format::Json => json(r),
        Format::Csv => csv_rows(
            std::iter::once(vec!["m".to_string()])
                .chain(r.members.iter().map(|m| vec![m.to_string()])),
        ),
        Format::Markdown => {
            let fmt = c.element_format();
            let plus = op_symbol(Op::Add, c.unicode);
            let one = fmt.format(&1u8);
            let mut out = format!("Machine infinity in `{}`, [0, {}]\n\n", r.gen, r.bound);
            if r.is_empty() {
                out += &format!("No M in range satisfies M {plus} {one} = M.\n");
                return Ok(out);
            }
            out += &format!(
                "{} elements satisfy M {plus} {one} = M:\n\n",
                r.members.len()
            );
            for &(s, e) in &r.runs {
                if s == e {
                    out += &format!("- {}\n", fmt.format(&s));
                } else {
                    out += &format!("- {} ..= {}\n", fmt.format(&s), fmt.format(&e));
                }
            }
            out += &format!(
                "\nFor each such M, {one} {} M. The equation is a true statement about {plus} in this \
                 arithmetic, so assuming it leads to no contradiction.\n",
                relation_symbol(Relation::MuchLess, c.unicode)
            );
            Ok(out)
        }
    }
}
