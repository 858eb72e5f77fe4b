use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

use super::instance::Instance;
use crate::canon::{canonicalize, Mode};
use crate::syntax::{serialize, RegexAst};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus I/O: {0}")]
    Io(#[from] io::Error),
    #[error("corpus line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
}

pub fn read_corpus(path: impl AsRef<Path>) -> Result<Vec<Instance>, CorpusError> {
    read_corpus_from(File::open(path)?)
}

/// One instance per non-blank line.
pub fn read_corpus_from(reader: impl Read) -> Result<Vec<Instance>, CorpusError> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(
            serde_json::from_str(&line).map_err(|source| CorpusError::Json {
                line: i + 1,
                source,
            })?,
        );
    }
    Ok(out)
}

pub fn write_corpus(path: impl AsRef<Path>, instances: &[Instance]) -> Result<(), CorpusError> {
    let mut w = BufWriter::new(File::create(path)?);
    write_corpus_to(&mut w, instances)?;
    w.flush()?;
    Ok(())
}

pub fn write_corpus_to(mut w: impl Write, instances: &[Instance]) -> Result<(), CorpusError> {
    for inst in instances {
        let line = serde_json::to_string(inst).map_err(|source| CorpusError::Json {
            line: 0,
            source,
        })?;
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// The canonical form with every literal replaced by one placeholder, so
/// regexes differing only in literal text collide.
pub fn literal_abstracted(ast: &RegexAst) -> RegexAst {
    let canonical = canonicalize(ast, Mode::Full).unwrap_or_else(|_| ast.clone());
    canonical.map_bottom_up(&mut |n| match n {
        RegexAst::Literal(_) => RegexAst::Literal("\u{0}".to_string()),
        other => other,
    })
}

pub fn structural_signature(ast: &RegexAst) -> String {
    serialize(&literal_abstracted(ast))
}

/// Keeps the first instance of each structural signature.
pub fn dedup_corpus(instances: Vec<Instance>) -> Vec<Instance> {
    let mut seen = std::collections::HashSet::new();
    instances
        .into_iter()
        .filter(|i| seen.insert(structural_signature(&i.gt)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn inst(id: &str, gt: &str) -> Instance {
        Instance {
            id: id.into(),
            gt: parse(gt).unwrap(),
            positives: vec!["a\tb".into()],
            negatives: vec![],
            holdout_positives: vec![],
            holdout_negatives: vec!["\u{c}".into()],
        }
    }

    #[test]
    fn roundtrip() {
        let c = vec![inst("0", "a\\tb|c+"), inst("1", "\\d{2,3}")];
        let mut buf = Vec::new();
        write_corpus_to(&mut buf, &c).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.contains("\\f"));
        assert_eq!(read_corpus_from(buf.as_slice()).unwrap(), c);
    }

    #[test]
    fn bad_line_reported() {
        let err = read_corpus_from("\n{\"id\":1}\n".as_bytes()).unwrap_err();
        assert!(matches!(err, CorpusError::Json { line: 2, .. }));
    }

    #[test]
    fn dedup_ignores_literal_text() {
        let c = vec![inst("0", "abc\\d+"), inst("1", "xy\\d+"), inst("2", "xy\\w+")];
        let d = dedup_corpus(c);
        assert_eq!(d.iter().map(|i| i.id.as_str()).collect::<Vec<_>>(), ["0", "2"]);
    }
}
