//! Oriented rewriting systems under an admissible order, diamond-lemma
//! confluence checking and bounded pairwise overlap completion.

use super::{NCPoly, NcgbError, Ordering3, WeightedDeglexOrder, Word};
use crate::exactnum::{Field, Rat, RatFunc};

/// One oriented rule `lead -> rhs`, with implicit leading coefficient 1.
/// Every word of `rhs` is strictly smaller than `lead` in the system order.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule<F: Field> {
    pub lead: Word,
    pub rhs: NCPoly<F>,
}

impl<F: Field> Rule<F> {
    /// The rule as an ideal element `lead - rhs`.
    pub fn as_poly(&self) -> NCPoly<F> {
        NCPoly::from_term(self.lead.clone(), F::one()).sub(&self.rhs)
    }
}

/// A critical pair: the ambiguity word together with its two one-step
/// reductions.
#[derive(Clone, Debug)]
pub struct CriticalPair<F: Field> {
    pub overlap: Word,
    pub reduction1: NCPoly<F>,
    pub reduction2: NCPoly<F>,
}

#[derive(Clone, Debug)]
pub struct RewritingSystem<F: Field> {
    rules: Vec<Rule<F>>,
    order: WeightedDeglexOrder,
    degree_bound: usize,
    num_generators: usize,
}

impl<F: Field> RewritingSystem<F> {
    /// Build a system from relation polynomials: each relation is oriented
    /// by its leading word and normalized to leading coefficient 1.
    ///
    /// In the polynomial-coefficient setting a relation whose leading
    /// coefficient is not an invertible constant is rejected, so that every
    /// specialization of the parameter keeps the same leading words.
    pub fn new(
        relations: Vec<NCPoly<F>>,
        order: WeightedDeglexOrder,
        degree_bound: usize,
        num_generators: usize,
    ) -> Result<Self, NcgbError> {
        let mut sys = RewritingSystem {
            rules: Vec::new(),
            order,
            degree_bound,
            num_generators,
        };
        for rel in relations {
            if rel.is_zero() {
                continue;
            }
            let rule = sys.orient(rel)?;
            sys.rules.push(rule);
        }
        sys.interreduce()?;
        Ok(sys)
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rules
    }

    pub fn order(&self) -> &WeightedDeglexOrder {
        &self.order
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    fn orient(&self, rel: NCPoly<F>) -> Result<Rule<F>, NcgbError> {
        let (lead, lc) = {
            let (w, c) = rel.leading(&self.order).expect("nonzero relation");
            (w.clone(), c.clone())
        };
        if !leading_coeff_invertible(&lc) {
            return Err(NcgbError::NonUnitLeadingCoefficient);
        }
        if lead.len() > self.degree_bound {
            return Err(NcgbError::DegreeBoundExceeded(self.degree_bound));
        }
        let mut rhs = rel.scale(&lc.inv()).neg();
        rhs.add_term(lead.clone(), F::one());
        Ok(Rule { lead, rhs })
    }

    /// One reduction step on `p`, rewriting the order-largest reducible word.
    /// Returns `None` when `p` is already in normal form.
    fn reduce_step(&self, p: &NCPoly<F>) -> Result<Option<NCPoly<F>>, NcgbError> {
        let mut best: Option<(&Word, usize, usize)> = None; // word, rule, position
        for (w, _) in p.terms() {
            for (ri, rule) in self.rules.iter().enumerate() {
                if let Some(pos) = w.find_subword(&rule.lead) {
                    let better = match &best {
                        None => true,
                        Some((bw, _, _)) => self.order.compare(w, bw) == Ordering3::GT,
                    };
                    if better {
                        best = Some((w, ri, pos));
                    }
                    break;
                }
            }
        }
        let Some((w, ri, pos)) = best else {
            return Ok(None);
        };
        let rule = &self.rules[ri];
        let w = w.clone();
        let c = p.coeff(&w);
        let a = w.slice(0, pos);
        let b = w.slice(pos + rule.lead.len(), w.len());
        let replacement = rule.rhs.sandwich(&a, &b).scale(&c);
        if replacement.max_word_len() > self.degree_bound {
            return Err(NcgbError::DegreeBoundExceeded(self.degree_bound));
        }
        let mut out = p.clone();
        out.add_term(w, c.neg());
        Ok(Some(out.add(&replacement)))
    }

    /// Normal form of `p`: no word of the result contains any rule's leading
    /// word as a factor.
    pub fn normal_form(&self, p: &NCPoly<F>) -> Result<NCPoly<F>, NcgbError> {
        let mut cur = p.clone();
        while let Some(next) = self.reduce_step(&cur)? {
            cur = next;
        }
        Ok(cur)
    }

    /// All overlap and inclusion ambiguities among the leading words, with
    /// ambiguity word length at most the degree bound.
    pub fn critical_pairs(&self) -> Vec<CriticalPair<F>> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            for (j, rj) in self.rules.iter().enumerate() {
                let u = &ri.lead;
                let v = &rj.lead;
                // overlap: a proper suffix of u equals a proper prefix of v
                for k in 1..u.len().min(v.len()) {
                    if u.0[u.len() - k..] != v.0[..k] {
                        continue;
                    }
                    let overlap = u.concat(&v.slice(k, v.len()));
                    if overlap.len() > self.degree_bound {
                        continue;
                    }
                    // reduce at position 0 with rule i, or at |u|-k with rule j
                    let reduction1 = ri.rhs.sandwich(&Word::one(), &v.slice(k, v.len()));
                    let reduction2 = rj.rhs.sandwich(&u.slice(0, u.len() - k), &Word::one());
                    out.push(CriticalPair {
                        overlap,
                        reduction1,
                        reduction2,
                    });
                }
                // inclusion: v a proper factor of u
                if i != j && v.len() < u.len() {
                    for pos in 0..=u.len() - v.len() {
                        if u.0[pos..pos + v.len()] != v.0[..] {
                            continue;
                        }
                        let reduction1 = ri.rhs.clone();
                        let reduction2 = rj
                            .rhs
                            .sandwich(&u.slice(0, pos), &u.slice(pos + v.len(), u.len()));
                        out.push(CriticalPair {
                            overlap: u.clone(),
                            reduction1,
                            reduction2,
                        });
                    }
                }
            }
        }
        out
    }

    /// Diamond lemma check: every critical pair's two reductions share a
    /// normal form.
    pub fn verify_confluent(&self) -> Result<bool, NcgbError> {
        for pair in self.critical_pairs() {
            let diff = pair.reduction1.sub(&pair.reduction2);
            if !self.normal_form(&diff)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pairwise overlap completion with interreduction. Returns a confluent
    /// system generating the same ideal in degrees up to the bound.
    pub fn complete(&self) -> Result<RewritingSystem<F>, NcgbError> {
        let mut sys = self.clone();
        sys.interreduce()?;
        loop {
            let mut added = false;
            for pair in sys.critical_pairs() {
                let diff = pair.reduction1.sub(&pair.reduction2);
                let nf = sys.normal_form(&diff)?;
                if !nf.is_zero() {
                    let rule = sys.orient(nf)?;
                    sys.rules.push(rule);
                    sys.interreduce()?;
                    added = true;
                    break;
                }
            }
            if !added {
                return Ok(sys);
            }
        }
    }

    /// Reduce every rule modulo the others until stable; drops redundant
    /// rules and keeps tails fully reduced.
    fn interreduce(&mut self) -> Result<(), NcgbError> {
        loop {
            let mut changed = false;
            for i in 0..self.rules.len() {
                let mut others = self.clone();
                others.rules.remove(i);
                let p = self.rules[i].as_poly();
                let nf = others.normal_form(&p)?;
                if nf == p {
                    continue;
                }
                changed = true;
                if nf.is_zero() {
                    self.rules.remove(i);
                } else {
                    self.rules[i] = self.orient(nf)?;
                }
                break;
            }
            if !changed {
                // deterministic rule order
                self.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
                return Ok(());
            }
        }
    }

    /// All words of length at most the degree bound containing no leading
    /// word as a factor, sorted ascending in the system order.
    ///
    /// Errors when normal words of length exactly the bound survive: the
    /// quotient may be infinite-dimensional or the bound too small.
    pub fn normal_monomials(&self) -> Result<Vec<Word>, NcgbError> {
        let num_gens = self.num_generators;
        let mut frontier = vec![Word::one()];
        let mut all = Vec::new();
        while let Some(w) = frontier.pop() {
            if w.len() == self.degree_bound && self.degree_bound > 0 {
                return Err(NcgbError::PossiblyInfiniteDimensional);
            }
            all.push(w.clone());
            if w.len() >= self.degree_bound {
                continue;
            }
            for g in 0..num_gens {
                let mut ext = w.clone();
                ext.0.push(g as u8);
                // w is normal, so only factors touching the last letter matter
                let reducible = self
                    .rules
                    .iter()
                    .any(|r| r.lead.len() <= ext.len() && ext.ends_with(&r.lead.0));
                if !reducible {
                    frontier.push(ext);
                }
            }
        }
        all.sort_by(|a, b| match self.order.compare(a, b) {
            Ordering3::LT => std::cmp::Ordering::Less,
            Ordering3::EQ => std::cmp::Ordering::Equal,
            Ordering3::GT => std::cmp::Ordering::Greater,
        });
        Ok(all)
    }
}

impl RewritingSystem<RatFunc> {
    /// Specialize every rule at `t = lambda`. Leading coefficients are 1, so
    /// the leading words survive and orientation is preserved.
    pub fn specialize(&self, lambda: &Rat) -> Result<RewritingSystem<Rat>, NcgbError> {
        let mut rules = Vec::with_capacity(self.rules.len());
        for r in &self.rules {
            let rhs = r
                .rhs
                .specialize(lambda)
                .map_err(|_| NcgbError::NonUnitLeadingCoefficient)?;
            rules.push(Rule {
                lead: r.lead.clone(),
                rhs,
            });
        }
        Ok(RewritingSystem {
            rules,
            order: self.order.clone(),
            degree_bound: self.degree_bound,
            num_generators: self.num_generators,
        })
    }
}

fn leading_coeff_invertible<F: Field>(c: &F) -> bool {
    !c.is_zero() && c.unit_for_rules()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::ncgb::parse_ncpoly;

    fn alpha() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    fn rel(text: &str) -> NCPoly<Rat> {
        parse_ncpoly(text, &alpha(), None)
            .unwrap()
            .specialize(&rat(0))
            .unwrap()
    }

    fn system(relations: &[&str], bound: usize) -> RewritingSystem<Rat> {
        let rels = relations.iter().map(|r| rel(r)).collect();
        RewritingSystem::new(rels, WeightedDeglexOrder::heavy_last(2, bound), bound, 2).unwrap()
    }

    /// Generating relations of the smallest D-type contraction algebra with
    /// both indices 2.
    fn d22_generators() -> RewritingSystem<Rat> {
        system(&["x*y + y*x", "x^3 + x^2 + y^2", "x^5"], 16)
    }

    #[test]
    fn normal_form_anticommutator() {
        let sys = system(&["y*x + x*y"], 8);
        let nf = sys.normal_form(&rel("y*x")).unwrap();
        assert_eq!(nf, rel("-x*y"));
        assert_eq!(sys.normal_form(&rel("1")).unwrap(), rel("1"));
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let sys = d22_generators().complete().unwrap();
        let p = rel("y*x*y + 3*x^4 + x*y*x");
        let q = rel("x^2*y - 2*y");
        let nfp = sys.normal_form(&p).unwrap();
        assert_eq!(sys.normal_form(&nfp).unwrap(), nfp);
        let nfq = sys.normal_form(&q).unwrap();
        let sum = sys.normal_form(&p.add(&q)).unwrap();
        assert_eq!(sum, nfp.add(&nfq));
    }

    /// Brute-force ambiguity oracle: every word that can be rewritten at two
    /// distinct (rule, position) pairs, restricted to genuinely overlapping
    /// or nested occurrences, must appear among the critical pair overlaps.
    #[test]
    fn critical_pairs_match_brute_force() {
        let sys = system(&["y*x", "y^2"], 8);
        let mut overlaps: Vec<Word> = sys
            .critical_pairs()
            .into_iter()
            .map(|p| p.overlap)
            .collect();
        overlaps.sort();
        // y·yx vs y²·x at y²x, and the self-overlap y·y² vs y²·y at y³
        assert_eq!(overlaps, vec![Word(vec![1, 1, 0]), Word(vec![1, 1, 1])]);

        // a single rule x^5 overlaps itself at lengths 6..=9
        let sys = system(&["x^5"], 9);
        let mut lens: Vec<usize> = sys
            .critical_pairs()
            .iter()
            .map(|p| p.overlap.len())
            .collect();
        lens.sort();
        assert_eq!(lens, vec![6, 7, 8, 9]);

        // no shared prefix/suffix anywhere: xy overlaps neither itself nor yx-free words
        let sys = system(&["x*y"], 8);
        assert!(sys.critical_pairs().is_empty());
    }

    #[test]
    fn d22_standard_basis_is_confluent() {
        let sys = system(&["y^2 + x^3 + x^2", "y*x + x*y", "x^3*y", "x^5"], 16);
        assert!(sys.verify_confluent().unwrap());
    }

    #[test]
    fn d22_completion_discovers_x3y() {
        let done = d22_generators().complete().unwrap();
        assert!(done.verify_confluent().unwrap());
        let leads: Vec<Word> = done.rules().iter().map(|r| r.lead.clone()).collect();
        assert!(leads.contains(&Word(vec![0, 0, 0, 1]))); // x³y
                                                          // completing an already-confluent system changes nothing
        let again = done.complete().unwrap();
        assert_eq!(again.rules(), done.rules());
    }

    #[test]
    fn type_a_relations_are_already_confluent() {
        let sys = system(&["x", "y^3"], 8);
        let done = sys.complete().unwrap();
        assert_eq!(done.rules().len(), 2);
        let basis = done.normal_monomials().unwrap();
        let alphabet = alpha();
        let shown: Vec<String> = basis
            .iter()
            .map(|w| w.display(&alphabet).to_string())
            .collect();
        assert_eq!(shown, vec!["1", "y", "y^2"]);
    }

    #[test]
    fn d22_normal_monomials() {
        let done = d22_generators().complete().unwrap();
        let basis = done.normal_monomials().unwrap();
        let alphabet = alpha();
        let shown: Vec<String> = basis
            .iter()
            .map(|w| w.display(&alphabet).to_string())
            .collect();
        assert_eq!(
            shown,
            vec!["1", "x", "x^2", "x^3", "x^4", "y", "x*y", "x^2*y"]
        );
        assert!(done.normal_form(&rel("x^3*y")).unwrap().is_zero());
    }

    #[test]
    fn trivial_quotient_and_infinite_detection() {
        let sys = system(&["x", "y"], 8);
        assert_eq!(sys.normal_monomials().unwrap(), vec![Word::one()]);
        // the commutator relation alone leaves a polynomial ring: words of
        // full bound length survive
        let sys = system(&["y*x - x*y"], 6);
        assert_eq!(
            sys.normal_monomials(),
            Err(NcgbError::PossiblyInfiniteDimensional)
        );
    }

    #[test]
    fn specialization_commutes_with_normal_form() {
        let alphabet = alpha();
        let rels = vec![
            parse_ncpoly("x*y + y*x", &alphabet, Some("t")).unwrap(),
            parse_ncpoly("y^2 - t", &alphabet, Some("t")).unwrap(),
            parse_ncpoly("x^2 - 1", &alphabet, Some("t")).unwrap(),
        ];
        let order = WeightedDeglexOrder::heavy_last(2, 12);
        let generic = RewritingSystem::new(rels, order, 12, 2)
            .unwrap()
            .complete()
            .unwrap();
        let lambda = rat(7);
        let special = generic.specialize(&lambda).unwrap();
        assert!(special.verify_confluent().unwrap());
        let p = parse_ncpoly("y*x*y*x + t*x*y", &alphabet, Some("t")).unwrap();
        let nf_then_spec = generic
            .normal_form(&p)
            .unwrap()
            .specialize(&lambda)
            .unwrap();
        let spec_then_nf = special
            .normal_form(&p.specialize(&lambda).unwrap())
            .unwrap();
        assert_eq!(nf_then_spec, spec_then_nf);
    }

    #[test]
    fn nonconstant_leading_coefficient_is_rejected() {
        let alphabet = alpha();
        let rels = vec![parse_ncpoly("t*x^2 - 1", &alphabet, Some("t")).unwrap()];
        let order = WeightedDeglexOrder::heavy_last(2, 8);
        let err = RewritingSystem::new(rels, order, 8, 2).unwrap_err();
        assert_eq!(err, NcgbError::NonUnitLeadingCoefficient);
    }
}
