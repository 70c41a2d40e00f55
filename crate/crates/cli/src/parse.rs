//! Inline grammar for partitions, labels, and poset indices.
//!
//! Partitions are comma-separated parts in `(...)` or `[...]`, or a bare
//! `∅` / `[]` / `()` for the empty diagram. Label slots are joined by `;`
//! in descending slot order, e.g. `∅;(1,1);(1,1);(1)` for t = 1.

use socle_core::category::{InjectiveIndex, InjectiveLabel, SimpleLabel};
use socle_core::Partition;

pub fn parse_partition(raw: &str) -> Result<Partition, String> {
    let s = raw.trim();
    if s == "∅" || s == "[]" || s == "()" || s.is_empty() {
        return Ok(Partition::empty());
    }
    let inner = if (s.starts_with('(') && s.ends_with(')'))
        || (s.starts_with('[') && s.ends_with(']'))
    {
        &s[1..s.len() - 1]
    } else {
        s
    };
    if inner.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for tok in inner.split(',') {
        let v: i64 = tok
            .trim()
            .parse()
            .map_err(|_| format!("bad partition part {tok:?} in {raw:?}"))?;
        parts.push(v);
    }
    Partition::parse(&parts).map_err(|e| e.to_string())
}

/// A label has t+3 slots: lambda_t ... lambda_0, mu, nu.
pub fn parse_label(raw: &str, t: usize) -> Result<SimpleLabel, String> {
    let slots: Vec<&str> = raw.split(';').collect();
    if slots.len() != t + 3 {
        return Err(format!(
            "label {raw:?} has {} slots, expected {} for t = {t}",
            slots.len(),
            t + 3
        ));
    }
    let mut parts = Vec::with_capacity(t + 3);
    for s in &slots {
        parts.push(parse_partition(s)?);
    }
    let nu = parts.pop().expect("slot count checked");
    let mu = parts.pop().expect("slot count checked");
    Ok(SimpleLabel::new(parts, mu, nu))
}

pub fn parse_injective_label(raw: &str, t: usize) -> Result<InjectiveLabel, String> {
    parse_label(raw, t).map(InjectiveLabel)
}

/// Index tuple `(n_t,...,n_0,n,m)`, with or without surrounding parens.
pub fn parse_index(raw: &str, t: usize) -> Result<InjectiveIndex, String> {
    let s = raw.trim();
    let inner = if (s.starts_with('(') && s.ends_with(')'))
        || (s.starts_with('[') && s.ends_with(']'))
    {
        &s[1..s.len() - 1]
    } else {
        s
    };
    let entries: Vec<u64> = inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad index entry {tok:?} in {raw:?}"))
        })
        .collect::<Result<_, _>>()?;
    if entries.len() != t + 3 {
        return Err(format!(
            "index {raw:?} has {} entries, expected {} for t = {t}",
            entries.len(),
            t + 3
        ));
    }
    let m = entries[entries.len() - 1];
    let n = entries[entries.len() - 2];
    Ok(InjectiveIndex::new(entries[..entries.len() - 2].to_vec(), n, m))
}
