//! Constraint reports: the verdict-and-trace output of every analysis.
//!
//! A [`ConstraintReport`] records a [`Verdict`] together with the ordered
//! list of [`Step`]s that produced it and the conclusion labels (for
//! confirmed analyses). A *passing* step records a derived fact or a
//! satisfied constraint; a *failing* step records a refuted scenario and must
//! cite the mathematical tool that refuted it (see [`citations`]).
//!
//! Two serializations are provided: a human-readable text form and a
//! line-oriented structured form (`cohomone/1`) that round-trips through
//! [`ConstraintReport::parse_structured`].

use crate::error::{Error, Result};

/// Outcome of an analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The scenario is realizable; conclusions list the realizations.
    Confirmed,
    /// Every scenario was refuted, each refutation citing its tool.
    Eliminated,
    /// The analysis could not be completed exactly (e.g. an enumeration
    /// whose completeness certificate failed); never silently truncated.
    Undetermined,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Eliminated => "ELIMINATED",
            Verdict::Undetermined => "UNDETERMINED",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "CONFIRMED" => Ok(Verdict::Confirmed),
            "ELIMINATED" => Ok(Verdict::Eliminated),
            "UNDETERMINED" => Ok(Verdict::Undetermined),
            _ => Err(Error::ParseReport(format!("unknown verdict {s:?}"))),
        }
    }
}

fn sanitize(s: &str) -> String {
    s.chars()
        .map(|c| {
            if c == '\t' || c == '\n' || c == '\r' {
                ' '
            } else {
                c
            }
        })
        .collect()
}

/// One line of an analysis trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pass: bool,
    constraint: String,
    citation: String,
}

impl Step {
    /// A satisfied constraint or derived fact (no citation required).
    pub fn pass(constraint: &str) -> Self {
        Step {
            pass: true,
            constraint: sanitize(constraint),
            citation: String::new(),
        }
    }

    /// A derived fact recorded together with the tool that produced it.
    pub fn pass_cited(constraint: &str, citation: &str) -> Self {
        Step {
            pass: true,
            constraint: sanitize(constraint),
            citation: sanitize(citation),
        }
    }

    /// A refuted scenario; the citation names the refuting tool and must be
    /// non-empty.
    pub fn fail(constraint: &str, citation: &str) -> Self {
        Step {
            pass: false,
            constraint: sanitize(constraint),
            citation: sanitize(citation),
        }
    }

    /// Whether the step passed (true) or refuted its scenario (false).
    pub fn passed(&self) -> bool {
        self.pass
    }

    /// The constraint or scenario text.
    pub fn constraint(&self) -> &str {
        &self.constraint
    }

    /// The citation (may be empty on passing steps).
    pub fn citation(&self) -> &str {
        &self.citation
    }
}

/// A complete analysis trace; see the module docs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintReport {
    verdict: Verdict,
    steps: Vec<Step>,
    conclusions: Vec<String>,
}

impl ConstraintReport {
    /// Assembles a report, sanitizing conclusion labels.
    pub fn new(verdict: Verdict, steps: Vec<Step>, conclusions: Vec<String>) -> Self {
        ConstraintReport {
            verdict,
            steps,
            conclusions: conclusions.iter().map(|c| sanitize(c)).collect(),
        }
    }

    /// The verdict.
    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    /// The trace steps, in analysis order.
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The conclusion labels (empty unless confirmed).
    pub fn conclusions(&self) -> &[String] {
        &self.conclusions
    }

    /// Structural invariants:
    ///
    /// * an `ELIMINATED` report has at least one failing step, and every
    ///   failing step cites a non-empty tool;
    /// * a `CONFIRMED` report has at least one conclusion;
    /// * an `UNDETERMINED` report has at least one step explaining why.
    pub fn validate(&self) -> Result<()> {
        match self.verdict {
            Verdict::Eliminated => {
                let fails: Vec<&Step> = self.steps.iter().filter(|s| !s.pass).collect();
                if fails.is_empty() {
                    return Err(Error::InvalidInput(
                        "ELIMINATED report with no failing step".to_string(),
                    ));
                }
                for s in fails {
                    if s.citation.is_empty() {
                        return Err(Error::InvalidInput(format!(
                            "failing step without citation: {}",
                            s.constraint
                        )));
                    }
                }
            }
            Verdict::Confirmed => {
                if self.conclusions.is_empty() {
                    return Err(Error::InvalidInput(
                        "CONFIRMED report with no conclusions".to_string(),
                    ));
                }
            }
            Verdict::Undetermined => {
                if self.steps.is_empty() {
                    return Err(Error::InvalidInput(
                        "UNDETERMINED report with no explanatory step".to_string(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Human-readable rendering: the verdict, one `PASS`/`FAIL` line per
    /// step (failures show their citation in brackets), then one
    /// `conclusion:` line per conclusion.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.verdict));
        for s in &self.steps {
            if s.pass {
                out.push_str(&format!("  PASS {}\n", s.constraint));
            } else {
                out.push_str(&format!("  FAIL {} [{}]\n", s.constraint, s.citation));
            }
        }
        for c in &self.conclusions {
            out.push_str(&format!("  conclusion: {c}\n"));
        }
        out
    }

    /// Structured rendering (`cohomone/1`): a header line, then
    /// tab-separated `verdict`, `step` and `conclusion` records. Fields never
    /// contain tabs or newlines (sanitized at construction).
    pub fn to_structured(&self) -> String {
        let mut out = String::from("cohomone/1\n");
        out.push_str(&format!("verdict\t{}\n", self.verdict));
        for s in &self.steps {
            out.push_str(&format!(
                "step\t{}\t{}\t{}\n",
                if s.pass { "PASS" } else { "FAIL" },
                s.constraint,
                s.citation
            ));
        }
        for c in &self.conclusions {
            out.push_str(&format!("conclusion\t{c}\n"));
        }
        out
    }

    /// Parses the structured form produced by
    /// [`ConstraintReport::to_structured`].
    pub fn parse_structured(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next() {
            Some("cohomone/1") => {}
            other => {
                return Err(Error::ParseReport(format!(
                    "expected header 'cohomone/1', got {other:?}"
                )))
            }
        }
        let mut verdict: Option<Verdict> = None;
        let mut steps = Vec::new();
        let mut conclusions = Vec::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            match fields.as_slice() {
                ["verdict", v] => {
                    if verdict.is_some() {
                        return Err(Error::ParseReport("duplicate verdict line".to_string()));
                    }
                    verdict = Some(v.parse()?);
                }
                ["step", flag, constraint, citation] => {
                    let pass = match *flag {
                        "PASS" => true,
                        "FAIL" => false,
                        other => {
                            return Err(Error::ParseReport(format!("unknown step flag {other:?}")))
                        }
                    };
                    steps.push(Step {
                        pass,
                        constraint: (*constraint).to_string(),
                        citation: (*citation).to_string(),
                    });
                }
                ["conclusion", label] => conclusions.push((*label).to_string()),
                _ => return Err(Error::ParseReport(format!("unrecognized record: {line:?}"))),
            }
        }
        let verdict =
            verdict.ok_or_else(|| Error::ParseReport("missing verdict line".to_string()))?;
        Ok(ConstraintReport {
            verdict,
            steps,
            conclusions,
        })
    }
}

/// The citation whitelist: every refuted scenario names the mathematical
/// tool that closed it, drawn from this fixed list of named results.
pub mod citations {
    /// Principal-orbit fiber models for the two-sided orbit fibration.
    pub const GROVE_HALPERIN_FIBER: &str = "Grove-Halperin principal-orbit fiber models";
    /// The classical list of compact groups acting transitively on spheres.
    pub const SPHERE_TRANSITIVE: &str =
        "transitive sphere actions catalog (Montgomery-Samelson, Borel)";
    /// Rigidity of homogeneous spaces with singly generated rational
    /// cohomology.
    pub const KZ_RIGIDITY: &str =
        "Kapovitch-Ziller rigidity for singly generated rational cohomology";
    /// Full-rank subalgebras via extended Dynkin diagram recursion.
    pub const BOREL_DE_SIEBENTHAL: &str = "Borel-de Siebenthal full-rank subalgebra recursion";
    /// Onishchik's tables of compact homogeneous-space factorizations and
    /// corank-one pairs.
    pub const ONISHCHIK_TABLES: &str =
        "Onishchik's tables of transitive actions and homogeneous-space factorizations";
    /// Low-dimensional cohomogeneity-one classification.
    pub const HOELSCHER_LOWDIM: &str =
        "Hoelscher's classification of low-dimensional cohomogeneity-one manifolds";
    /// Cohomogeneity-one rational complex projective spaces.
    pub const UCHIDA_CP: &str =
        "Uchida's classification of cohomogeneity-one rational complex projective spaces";
    /// Cohomogeneity-one rational quaternionic projective spaces.
    pub const IWATA_HP: &str =
        "Iwata's classification of cohomogeneity-one rational quaternionic projective spaces";
    /// Cohomogeneity-one rational Cayley planes.
    pub const IWATA_OP: &str = "Iwata's classification of cohomogeneity-one rational Cayley planes";
    /// Classification of primitive maximal cohomogeneity-one actions.
    pub const FRANK_PRIMITIVE: &str =
        "Frank's classification of primitive maximal cohomogeneity-one actions";
    /// The dimension-to-Euler-characteristic ratio filter over that
    /// classification's tables.
    pub const RATIO_FILTER: &str =
        "dimension to Euler-characteristic ratio filter with exact tail certificates";
    /// Degree bounds satisfied by rationally elliptic spaces.
    pub const ELLIPTIC_BOUNDS: &str =
        "Friedlander-Halperin degree bounds for rationally elliptic spaces";
    /// Positivity of the Dynkin index of simple subgroup embeddings.
    pub const DYNKIN_INDEX: &str = "nonvanishing Dynkin index for simple subgroup embeddings";
    /// Triviality of bundles with small fiber over spheres and the Cayley
    /// plane.
    pub const SMALL_FIBER: &str =
        "bundle triviality over spheres and the Cayley plane with small fiber";
    /// Factorization of non-primitive actions through homogeneous bundles.
    pub const NONPRIM_FACTORIZATION: &str =
        "spectral-sequence factorization of non-primitive actions";
    /// Euler characteristic of equal-rank quotients as a Weyl-order ratio.
    pub const EULER_WEYL: &str = "Hopf-Samelson Euler characteristic formula";
    /// Rank and parity constraints forced by positive Euler characteristic.
    pub const RANK_PARITY: &str =
        "equal-rank and parity constraints from positive Euler characteristic";
    /// Codimension bounds and connectivity of cohomogeneity-one strata.
    pub const COHOM_TOPOLOGY: &str = "topological constraints on cohomogeneity-one group diagrams";
    /// Actions with two non-orientable singular orbits.
    pub const BOTH_NONORIENTABLE: &str =
        "structure of actions with two non-orientable singular orbits";
    /// Actions with one non-orientable singular orbit.
    pub const ONE_NONORIENTABLE: &str =
        "structure of actions with one non-orientable singular orbit";
    /// Actions with both singular codimensions equal to two.
    pub const CODIM_TWO_PAIR: &str = "structure of actions with both singular codimensions two";
    /// Normal forms of singular orbit types over singly generated targets.
    pub const ORBIT_TYPE: &str =
        "orbit-type normal forms over singly generated rational cohomology";
    /// Detection of non-trivial connecting maps through the loop-space
    /// factor of the principal-orbit fiber model.
    pub const CONNECTING_DEGREE: &str = "loop-space detection of non-trivial connecting maps";
    /// Long exact homotopy sequence bookkeeping for the orbit fibrations.
    pub const LES_FIBRATION: &str = "long exact homotopy sequence of the orbit fibrations";
    /// Classification of cohomogeneity-one spaces with principal orbit a
    /// rational product of low-dimensional spheres.
    pub const DEVITO_LOWDIM: &str =
        "DeVito's classification of cohomogeneity-one rational sphere products";
    /// Structure results for four-periodic rational types under the
    /// even-codimension normal forms.
    pub const DEVITO_FOURPERIODIC: &str =
        "DeVito's structure results for four-periodic cohomogeneity-one spaces";
    /// Finiteness of fundamental groups under positive Euler characteristic.
    pub const PI1_FINITE: &str =
        "finiteness of fundamental groups in positive Euler characteristic";
    /// Injectivity of principal-orbit homotopy into the even-codimension
    /// singular orbit.
    pub const CASE2_INJECTIVITY: &str =
        "injectivity of principal-orbit homotopy into the even-codimension singular orbit";
    /// Mayer-Vietoris bookkeeping over the two-disk-bundle decomposition.
    pub const MAYER_VIETORIS: &str = "Mayer-Vietoris sequence of the two-disk-bundle decomposition";

    /// Every citation the engine may attach to a failing step.
    pub const ALL: &[&str] = &[
        GROVE_HALPERIN_FIBER,
        SPHERE_TRANSITIVE,
        KZ_RIGIDITY,
        BOREL_DE_SIEBENTHAL,
        ONISHCHIK_TABLES,
        HOELSCHER_LOWDIM,
        UCHIDA_CP,
        IWATA_HP,
        IWATA_OP,
        FRANK_PRIMITIVE,
        RATIO_FILTER,
        ELLIPTIC_BOUNDS,
        DYNKIN_INDEX,
        SMALL_FIBER,
        NONPRIM_FACTORIZATION,
        EULER_WEYL,
        RANK_PARITY,
        COHOM_TOPOLOGY,
        BOTH_NONORIENTABLE,
        ONE_NONORIENTABLE,
        CODIM_TWO_PAIR,
        ORBIT_TYPE,
        CONNECTING_DEGREE,
        LES_FIBRATION,
        DEVITO_LOWDIM,
        DEVITO_FOURPERIODIC,
        PI1_FINITE,
        CASE2_INJECTIVITY,
        MAYER_VIETORIS,
    ];
}
