use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

/// An interned variable name.
///
/// Variables are ordered lexicographically by name. Two `Var`s with the same
/// name are the same pointer, so equality and hashing are by address.
#[derive(Clone, Copy)]
pub struct Var(&'static str);

fn interner() -> &'static Mutex<HashSet<&'static str>> {
    static TABLE: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashSet::new()))
}

impl Var {
    pub fn new(name: &str) -> Var {
        let mut table = interner().lock().expect("variable table poisoned");
        if let Some(&s) = table.get(name) {
            return Var(s);
        }
        let s: &'static str = Box::leak(name.to_owned().into_boxed_str());
        table.insert(s);
        Var(s)
    }

    pub fn name(self) -> &'static str {
        self.0
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Var) -> bool {
        std::ptr::eq(self.0.as_ptr(), other.0.as_ptr())
    }
}

impl Eq for Var {}

impl Hash for Var {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.0.as_ptr() as usize).hash(state)
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Var) -> Ordering {
        if self == other {
            Ordering::Equal
        } else {
            self.0.cmp(other.0)
        }
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Var) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_idempotent() {
        let a = Var::new("yp");
        let b = Var::new(&String::from("yp"));
        assert_eq!(a, b);
        assert!(std::ptr::eq(a.name(), b.name()));
    }

    #[test]
    fn order_is_lexicographic() {
        let mut v = vec![Var::new("x"), Var::new("a"), Var::new("lam"), Var::new("al10"), Var::new("al2")];
        v.sort();
        let names: Vec<_> = v.iter().map(|v| v.name()).collect();
        assert_eq!(names, ["a", "al10", "al2", "lam", "x"]);
    }
}
