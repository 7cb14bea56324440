use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;

/// Prefix reserved for meta-variables. Source identifiers can never start
/// with it, so generated metas never collide with declared names.
pub const META_PREFIX: char = '?';
const META_COUNTER: char = '#';

/// Monotone supply of meta-variable names for a single inference run.
#[derive(Clone, Debug, Default)]
pub struct MetaSupply {
    next: usize,
}

impl MetaSupply {
    pub fn new() -> MetaSupply {
        MetaSupply { next: 0 }
    }

    /// Mints `?X#n`, keyed to the quantifier name `origin` it replaces.
    pub fn fresh(&mut self, origin: &str) -> String {
        let n = self.next;
        self.next += 1;
        format!("{META_PREFIX}{}{META_COUNTER}{n}", meta_origin(origin))
    }

    /// A supply whose names cannot clash with any meta already mentioned
    /// in `names`.
    pub fn beyond<'a>(names: impl IntoIterator<Item = &'a str>) -> MetaSupply {
        let next = names
            .into_iter()
            .filter_map(|n| n.rsplit_once(META_COUNTER))
            .filter_map(|(_, k)| k.parse::<usize>().ok())
            .map(|k| k + 1)
            .max()
            .unwrap_or(0);
        MetaSupply { next }
    }
}

pub fn is_meta_name(name: &str) -> bool {
    name.starts_with(META_PREFIX)
}

/// The quantifier name a meta-variable was minted from (`?X#3` gives `X`).
pub fn meta_origin(name: &str) -> &str {
    let base = name.strip_prefix(META_PREFIX).unwrap_or(name);
    match base.rsplit_once(META_COUNTER) {
        Some((b, _)) => b,
        None => base,
    }
}

/// Display form used in diagnostics: `?X#3` renders as `?X`.
pub fn display_name(name: &str) -> &str {
    if is_meta_name(name) {
        match name.rsplit_once(META_COUNTER) {
            Some((b, _)) => b,
            None => name,
        }
    } else {
        name
    }
}

/// A variant of `base` not contained in `avoid`.
pub fn rename_away(base: &str, avoid: &BTreeSet<String>) -> String {
    if !avoid.contains(base) {
        return String::from(base);
    }
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
    let stem = if stem.is_empty() || stem.ends_with(META_COUNTER) { base } else { stem };
    (1..).map(|i| format!("{stem}{i}")).find(|c| !avoid.contains(c)).expect("unbounded search")
}
