//! Machine-readable verification reports.

use altroute::{RouteKind, VerifyReport};
use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub instance: String,
    pub kind: String,
    pub crossings: usize,
    pub bound: Option<usize>,
    pub one_plane: bool,
    pub bridges_used: usize,
    pub violations: Vec<String>,
}

pub fn kind_name(kind: RouteKind) -> &'static str {
    match kind {
        RouteKind::Cycle => "cycle",
        RouteKind::Path => "path",
    }
}

impl Report {
    pub fn new(instance: &str, kind: RouteKind, rep: &VerifyReport) -> Report {
        Report {
            instance: instance.to_string(),
            kind: kind_name(kind).to_string(),
            crossings: rep.crossings,
            bound: rep.bound,
            one_plane: rep.one_plane,
            bridges_used: rep.bridges_used,
            violations: rep.violations.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_text(&self) -> String {
        let bound = self.bound.map_or("n/a".to_string(), |b| b.to_string());
        let status = if self.violations.is_empty() {
            "ok".to_string()
        } else {
            format!("FAILED: {}", self.violations.join("; "))
        };
        format!(
            "instance: {}\nkind: {}\ncrossings: {}\nbound: {}\none_plane: {}\nbridges_used: {}\nstatus: {}\n",
            self.instance, self.kind, self.crossings, bound, self.one_plane, self.bridges_used, status
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use altroute::{optimum_cycle, verify_route, BicoloredSet};

    #[test]
    fn json_carries_all_fields() {
        let s = BicoloredSet::from_color_string("RRBB").unwrap();
        let c = optimum_cycle(&s).unwrap();
        let rep = verify_route(&s, &c);
        let json = Report::new("inline", c.kind, &rep).to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["kind"], "cycle");
        assert_eq!(v["crossings"], 1);
        assert_eq!(v["bound"], 1);
        assert_eq!(v["one_plane"], true);
        assert!(v["violations"].as_array().unwrap().is_empty());
    }
}
