//! Named example families.

use crate::exactalg::q;
use crate::family::{Bindings, Construction};

pub struct Builtin {
    pub name: &'static str,
    pub description: &'static str,
    pub json: &'static str,
    /// Default values for the symbolic parameters of the construction.
    pub defaults: &'static [(&'static str, (i64, i64))],
}

impl Builtin {
    pub fn construction(&self) -> Construction {
        Construction::from_json(self.json).expect("builtin constructions parse")
    }

    pub fn default_bindings(&self) -> Bindings {
        self.defaults
            .iter()
            .map(|(name, (p, d))| (name.to_string(), q(*p, *d)))
            .collect()
    }
}

const EX52_BASE: &str = r#"{"type":"proj_bundle","base_genus":0,"degrees":[2,-1,-1]}"#;

pub const BUILTINS: &[Builtin] = &[
    Builtin {
        name: "ex5_2_base",
        description: "P(O(2) ⊕ O(−1) ⊕ O(−1)) over P¹ polarised by O(1); every λ_i has degree 0",
        json: EX52_BASE,
        defaults: &[],
    },
    Builtin {
        name: "ex5_2_blowup",
        description: "ex5_2_base blown up along the section P(O(2)), L_ε = q*L − εE; σ = −12",
        json: r#"{"type":"blowup",
            "ambient":{"type":"proj_bundle","base_genus":0,"degrees":[2,-1,-1]},
            "multisection":{"d":1,"canonical_degree":-2,"deg_L":"-2","deg_K_rel":"6"},
            "epsilon":"eps"}"#,
        defaults: &[("eps", (1, 10))],
    },
    Builtin {
        name: "ex5_4_blowup",
        description: "ex5_2_base blown up along the section P(O(−1)); σ = 6",
        json: r#"{"type":"blowup",
            "ambient":{"type":"proj_bundle","base_genus":0,"degrees":[2,-1,-1]},
            "multisection":{"d":1,"canonical_degree":-2,"deg_L":"1","deg_K_rel":"-3"},
            "epsilon":"eps"}"#,
        defaults: &[("eps", (1, 10))],
    },
    Builtin {
        name: "ex5_5_iterated",
        description: "ex5_2_blowup at ε, then blown up along three further sections of type P(O(−1)) \
                      (one d = 3 multisection, deg L|C = 3) at ε′ ≪ ε",
        json: r#"{"type":"blowup",
            "ambient":{"type":"blowup",
                "ambient":{"type":"proj_bundle","base_genus":0,"degrees":[2,-1,-1]},
                "multisection":{"d":1,"canonical_degree":-2,"deg_L":"-2","deg_K_rel":"6"},
                "epsilon":"eps"},
            "multisection":{"d":3,"canonical_degree":-6,"deg_L":"3","deg_K_rel":"-9"},
            "epsilon":"eps_prime"}"#,
        defaults: &[("eps", (1, 10)), ("eps_prime", (1, 1000))],
    },
    Builtin {
        name: "ex5_6_product",
        description: "fibred product of ex5_2_blowup with P(O(1) ⊕ O ⊕ O): relative dimension 4, \
                      negative CM degree",
        json: r#"{"type":"product",
            "left":{"type":"blowup",
                "ambient":{"type":"proj_bundle","base_genus":0,"degrees":[2,-1,-1]},
                "multisection":{"d":1,"canonical_degree":-2,"deg_L":"-2","deg_K_rel":"6"},
                "epsilon":"eps"},
            "right":{"type":"proj_bundle","base_genus":0,"degrees":[1,0,0]}}"#,
        defaults: &[("eps", (1, 10))],
    },
];

pub fn builtin(name: &str) -> Option<&'static Builtin> {
    BUILTINS.iter().find(|b| b.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Construction;

    #[test]
    fn all_builtins_evaluate_with_defaults() {
        for b in BUILTINS {
            let c = b.construction();
            let bound: Vec<String> = b.default_bindings().into_keys().collect();
            assert_eq!(c.free_params().into_iter().collect::<Vec<_>>(), bound, "{}", b.name);
            c.evaluate(&b.default_bindings()).unwrap();
        }
        assert_eq!(BUILTINS.len(), 5);
    }

    #[test]
    fn base_json_is_shared() {
        let base = Construction::from_json(EX52_BASE).unwrap();
        let Construction::Blowup { ambient, .. } = builtin("ex5_2_blowup").unwrap().construction() else {
            panic!("not a blowup");
        };
        assert_eq!(*ambient, base);
    }
}
