//! Knot table ingestion and certificate serialization.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::casework::Certificate;
use crate::error::{Error, Result};
use crate::knot::{KnotRecord, RootOfUnity, SeifertMatrix};

/// One CSV row as written on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotTableRow {
    pub name: String,
    pub g4: String,
    pub arf: String,
    pub sigmas: String,
    #[serde(default)]
    pub seifert: String,
}

pub fn parse_samples(s: &str) -> Result<Vec<(RootOfUnity, i64)>> {
    let mut out = Vec::new();
    for tok in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (w, v) = tok.split_once('=').ok_or_else(|| Error::Parse(format!("sample {tok:?} is not r/m=value")))?;
        let v: i64 = v.trim().parse().map_err(|_| Error::Parse(format!("bad signature value in {tok:?}")))?;
        if v % 2 != 0 {
            return Err(Error::Parse(format!("signature {v} at {} is odd", w.trim())));
        }
        out.push((w.parse()?, v));
    }
    Ok(out)
}

pub fn parse_seifert(s: &str) -> Result<Option<SeifertMatrix>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(None);
    }
    let rows = s
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad Seifert entry {x:?}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SeifertMatrix::new(rows).map(Some)
}

pub fn format_seifert(v: &SeifertMatrix) -> String {
    v.entries()
        .iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

impl KnotTableRow {
    pub fn to_record(&self) -> Result<KnotRecord> {
        let g4 = self.g4.trim().parse().map_err(|_| Error::Parse(format!("bad g4 {:?}", self.g4)))?;
        let arf = self.arf.trim().parse().map_err(|_| Error::Parse(format!("bad arf {:?}", self.arf)))?;
        KnotRecord::new(self.name.trim(), g4, arf, parse_samples(&self.sigmas)?, parse_seifert(&self.seifert)?)
    }

    pub fn from_record(k: &KnotRecord) -> Self {
        Self {
            name: k.name.clone(),
            g4: k.g4.to_string(),
            arf: k.arf.to_string(),
            sigmas: k.signature_samples.iter().map(|(w, v)| format!("{w}={v}")).collect::<Vec<_>>().join(";"),
            seifert: k.seifert.as_ref().map(format_seifert).unwrap_or_default(),
        }
    }
}

/// Parse a knot table. Lines starting with '#' are comments. Errors carry the
/// 1-based line number of the offending row.
pub fn read_knot_table(text: &str) -> Result<Vec<KnotRecord>> {
    // The csv reader's own comment handling does not count skipped lines, so
    // strip comments here and keep a map back to source line numbers.
    let (kept, source_line): (Vec<&str>, Vec<u64>) = text
        .lines()
        .zip(1..)
        .filter(|(l, _)| !l.trim_start().starts_with('#') && !l.trim().is_empty())
        .unzip();
    let body = kept.join("\n");
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(body.as_bytes());
    let headers = rdr.headers().map_err(|e| Error::Parse(e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["name", "g4", "arf", "sigmas", "seifert"] {
        return Err(Error::Parse(format!("header must be name,g4,arf,sigmas,seifert, got {}", headers.iter().collect::<Vec<_>>().join(","))));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        let line = rec.position().and_then(|p| source_line.get(p.line() as usize - 1)).copied().unwrap_or(0);
        let row: KnotTableRow = rec.deserialize(Some(&headers)).map_err(|e| Error::Parse(format!("line {line}: {e}")))?;
        let k = row.to_record().map_err(|e| Error::Parse(format!("line {line}: {e}")))?;
        if out.iter().any(|o: &KnotRecord| o.name == k.name) {
            return Err(Error::Parse(format!("line {line}: duplicate knot {}", k.name)));
        }
        out.push(k);
    }
    Ok(out)
}

pub fn ingest_knot_table(path: impl AsRef<Path>) -> Result<Vec<KnotRecord>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read_knot_table(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        e => e,
    })
}

pub fn write_knot_table(records: &[KnotRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for k in records {
        w.serialize(KnotTableRow::from_record(k)).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Parse(format!("unknown format {s}"))),
        }
    }
}

/// serde_json's default map is a BTreeMap, so going through `Value` sorts keys.
pub fn certificate_json(cert: &Certificate) -> String {
    let v = serde_json::to_value(cert).expect("certificate serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

pub fn certificate_markdown(cert: &Certificate) -> String {
    let mut s = String::new();
    let i = &cert.input;
    let _ = writeln!(s, "# Certificate for {} (lk = {}, twists = {})\n", i.knot, i.lk, i.twists);
    let _ = writeln!(s, "- verdict: **{}**", cert.verdict);
    let _ = writeln!(s, "- record sha256: `{}`", i.digest);
    let _ = writeln!(s, "- rokhlin: {:?}\n", cert.rokhlin);
    if let Some(a) = &cert.assumptions {
        let _ = writeln!(s, "## Assumptions\n");
        for item in &a.items {
            let _ = writeln!(s, "- {} {:?}: {}", item.id, item.status, item.detail);
        }
        s.push('\n');
    }
    if !cert.decomposition.is_empty() {
        let _ = writeln!(s, "## Excluded shapes\n");
        for e in &cert.decomposition {
            let _ = writeln!(s, "- {} ({}): {}", e.label, e.citation, if e.closed() { "closed" } else { "OPEN" });
        }
        s.push('\n');
    }
    for n in &cert.cases {
        let _ = writeln!(s, "## {} [{}]\n", n.label, n.citation);
        for l in &n.leaves {
            let flags = if l.flags.is_empty() { String::new() } else { format!(" ({})", l.flags.join(", ")) };
            let _ = writeln!(s, "- {}: {:?} by {}{}", l.label, l.verdict.outcome, l.verdict.citation, flags);
        }
        s.push('\n');
    }
    if !cert.reasons.is_empty() {
        let _ = writeln!(s, "## Open\n");
        for r in &cert.reasons {
            let _ = writeln!(s, "- {r}");
        }
    }
    s
}

pub fn emit_certificate(cert: &Certificate, format: Format) -> Vec<u8> {
    match format {
        Format::Json => certificate_json(cert).into_bytes(),
        Format::Markdown => certificate_markdown(cert).into_bytes(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEAD: &str = "name,g4,arf,sigmas,seifert\n";

    #[test]
    fn k10_125_row() {
        let ks = read_knot_table(&format!("{HEAD}10_125,1,1,1/2=2;1/3=0;1/5=0;2/5=2,\n")).unwrap();
        let k = &ks[0];
        assert_eq!((k.g4, k.arf), (1, 1));
        assert_eq!(k.sample(RootOfUnity::new(2, 5).unwrap()), Some(2));
        assert_eq!(k.sample(RootOfUnity::new(1, 2).unwrap()), Some(2));
    }

    #[test]
    fn rejections() {
        let e = read_knot_table(&format!("{HEAD}# c\nx,1,0,1/2=1,\n")).unwrap_err();
        assert!(e.to_string().contains("line 3") && e.to_string().contains("odd"), "{e}");
        assert!(read_knot_table(&format!("{HEAD}x,one,0,,\n")).is_err());
        assert!(read_knot_table("name,g4\nx,1\n").is_err());
        assert!(read_knot_table(&format!("{HEAD}3_1,1,1,1/2=-2,\"-1,1;0,-1\"\n")).is_ok());
        assert!(read_knot_table(&format!("{HEAD}3_1,1,1,1/2=2,\"-1,1;0,-1\"\n")).is_err());
    }

    #[test]
    fn round_trip() {
        let text = format!("{HEAD}3_1,1,1,1/2=-2;1/3=-2,\"-1,1;0,-1\"\nu,0,0,,\n");
        let ks = read_knot_table(&text).unwrap();
        assert_eq!(read_knot_table(&write_knot_table(&ks).unwrap()).unwrap(), ks);
    }
}
