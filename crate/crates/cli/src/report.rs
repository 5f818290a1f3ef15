use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::Value;

use jacres_core::closure::Extended;
use jacres_core::field::fmt_rational;
use jacres_core::poly::Polynomial;
use jacres_core::Coeff;

/// Ordered key/value report. Keys serialize in insertion order, so the JSON
/// form is byte-stable across runs.
#[derive(Default, Debug, Clone)]
pub struct Report {
    entries: Vec<(String, Item)>,
}

#[derive(Debug, Clone)]
pub enum Item {
    Leaf(Value),
    List(Vec<Item>),
    Nested(Report),
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: &str, v: impl Into<Item>) -> &mut Self {
        self.entries.push((key.to_string(), v.into()));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out.truncate(out.trim_end().len());
        out
    }

    fn write_text(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        for (k, v) in &self.entries {
            match v {
                Item::Nested(r) => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    r.write_text(out, indent + 1);
                }
                Item::List(items) if items.iter().any(|i| matches!(i, Item::Nested(_))) => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    for (i, item) in items.iter().enumerate() {
                        match item {
                            Item::Nested(r) => {
                                out.push_str(&format!("{pad}  [{i}]\n"));
                                r.write_text(out, indent + 2);
                            }
                            other => out.push_str(&format!("{pad}  [{i}] {}\n", other.inline())),
                        }
                    }
                }
                other => out.push_str(&format!("{pad}{k}: {}\n", other.inline())),
            }
        }
    }
}

impl Item {
    /// One-line rendering: strings unquoted, `null` as `-`.
    pub fn inline(&self) -> String {
        match self {
            Item::Leaf(Value::String(s)) => s.clone(),
            Item::Leaf(Value::Null) => "-".into(),
            Item::Leaf(v) => v.to_string(),
            Item::List(items) => format!("[{}]", items.iter().map(Item::inline).collect::<Vec<_>>().join(", ")),
            Item::Nested(r) => r.to_json(),
        }
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Serialize for Item {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Item::Leaf(v) => v.serialize(s),
            Item::List(items) => items.serialize(s),
            Item::Nested(r) => r.serialize(s),
        }
    }
}

impl From<Report> for Item {
    fn from(r: Report) -> Self {
        Item::Nested(r)
    }
}

impl From<bool> for Item {
    fn from(b: bool) -> Self {
        Item::Leaf(Value::Bool(b))
    }
}

impl From<usize> for Item {
    fn from(n: usize) -> Self {
        Item::Leaf(Value::from(n))
    }
}

impl From<u32> for Item {
    fn from(n: u32) -> Self {
        Item::Leaf(Value::from(n))
    }
}

impl From<String> for Item {
    fn from(s: String) -> Self {
        Item::Leaf(Value::String(s))
    }
}

impl From<&str> for Item {
    fn from(s: &str) -> Self {
        Item::Leaf(Value::String(s.to_string()))
    }
}

impl From<&Polynomial> for Item {
    fn from(p: &Polynomial) -> Self {
        Item::Leaf(Value::String(p.to_string()))
    }
}

impl From<&Coeff> for Item {
    fn from(c: &Coeff) -> Self {
        Item::Leaf(Value::String(fmt_rational(c)))
    }
}

impl From<&Extended> for Item {
    fn from(e: &Extended) -> Self {
        Item::Leaf(Value::String(e.to_string()))
    }
}

impl<T: Into<Item>> From<Option<T>> for Item {
    fn from(o: Option<T>) -> Self {
        o.map_or(Item::Leaf(Value::Null), Into::into)
    }
}

impl<T: Into<Item>> From<Vec<T>> for Item {
    fn from(v: Vec<T>) -> Self {
        Item::List(v.into_iter().map(Into::into).collect())
    }
}
