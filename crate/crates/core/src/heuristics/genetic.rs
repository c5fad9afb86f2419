use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{count_violations, Coloring};
use crate::error::{ColoringError, HeuristicError};
use crate::graph::DistanceMatrix;
use crate::heuristics::operators::{crossover1, crossover2, mutation, random_coloring};
use crate::heuristics::{rng, HeuristicOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaConfig {
    pub k: u32,
    pub max_iterations: u64,
    pub population_size: usize,
    /// Offspring produced by crossover 1 in each generation.
    pub crossover1_offspring: usize,
    /// Offspring produced by crossover 2 in each generation.
    pub crossover2_offspring: usize,
    pub mutants: usize,
    pub seed: u64,
}

impl GaConfig {
    pub fn new(k: u32) -> Self {
        GaConfig {
            k,
            max_iterations: 500,
            population_size: 50,
            crossover1_offspring: 25,
            crossover2_offspring: 25,
            mutants: 25,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: u64) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_population_size(mut self, population_size: usize) -> Self {
        self.population_size = population_size;
        self
    }

    fn validate(&self) -> Result<(), HeuristicError> {
        if self.k == 0 {
            return Err(ColoringError::ZeroBudget.into());
        }
        if self.population_size < 2 {
            return Err(HeuristicError::Config(format!(
                "population size must be at least 2, got {}",
                self.population_size
            )));
        }
        if self.max_iterations == 0 {
            return Err(HeuristicError::Config(
                "max_iterations must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Population snapshot after one generation's truncation.
#[derive(Debug, Clone, Copy)]
pub struct GaStep<'a> {
    pub iteration: u64,
    /// Violation counts of the surviving population, best first.
    pub violations: &'a [usize],
}

#[derive(Clone)]
struct Individual {
    coloring: Coloring,
    violations: usize,
}

impl Individual {
    fn evaluate(d: &DistanceMatrix, coloring: Coloring) -> Self {
        let violations = count_violations(d, coloring.colors(), coloring.k());
        Individual {
            coloring,
            violations,
        }
    }
}

fn pick_pair<R: Rng>(len: usize, rng: &mut R) -> (usize, usize) {
    let idx = sample(rng, len, 2);
    (idx.index(0), idx.index(1))
}

pub fn genetic_algorithm(
    d: &DistanceMatrix,
    cfg: &GaConfig,
) -> Result<HeuristicOutcome, HeuristicError> {
    genetic_algorithm_observed(d, cfg, |_| {})
}

/// Generational GA over colorings with a fixed budget `k`.
///
/// Each generation draws parents uniformly, produces the configured number
/// of crossover-1 and crossover-2 offspring and mutants, merges them with
/// the population, stable-sorts by fitness (new members first among ties)
/// and truncates back to `population_size`. Returns as soon as a
/// packing coloring appears.
pub fn genetic_algorithm_observed(
    d: &DistanceMatrix,
    cfg: &GaConfig,
    mut observe: impl FnMut(&GaStep<'_>),
) -> Result<HeuristicOutcome, HeuristicError> {
    cfg.validate()?;
    let n = d.n();
    let mut init_rng = rng::stream(cfg.seed, rng::INIT);
    let mut select_rng = rng::stream(cfg.seed, rng::SELECTION);
    let mut c1_rng = rng::stream(cfg.seed, rng::CROSSOVER1);
    let mut c2_rng = rng::stream(cfg.seed, rng::CROSSOVER2);
    let mut mut_rng = rng::stream(cfg.seed, rng::MUTATION);

    let mut population: Vec<Individual> = (0..cfg.population_size)
        .map(|_| Individual::evaluate(d, random_coloring(n, cfg.k, &mut init_rng)))
        .collect();
    if let Some(found) = population.iter().find(|i| i.violations == 0) {
        return Ok(HeuristicOutcome::new(found.coloring.clone(), 0, 0));
    }
    population.sort_by_key(|i| i.violations);

    let mut iteration = 0;
    while iteration < cfg.max_iterations {
        iteration += 1;
        let size = population.len();
        let mut offspring =
            Vec::with_capacity(cfg.crossover1_offspring + cfg.crossover2_offspring + cfg.mutants);
        for _ in 0..cfg.crossover1_offspring {
            let (a, b) = pick_pair(size, &mut select_rng);
            offspring.push(crossover1(
                &population[a].coloring,
                &population[b].coloring,
                &mut c1_rng,
            )?);
        }
        for _ in 0..cfg.crossover2_offspring {
            let (a, b) = pick_pair(size, &mut select_rng);
            offspring.push(crossover2(
                &population[a].coloring,
                &population[b].coloring,
                &mut c2_rng,
            )?);
        }
        for _ in 0..cfg.mutants {
            let a = select_rng.gen_range(0..size);
            offspring.push(mutation(&population[a].coloring, &mut mut_rng)?);
        }
        // Newcomers go first so that, after the stable sort, they win ties
        // and the population can drift across fitness plateaus.
        let mut merged: Vec<Individual> = offspring
            .into_iter()
            .map(|c| Individual::evaluate(d, c))
            .collect();
        merged.append(&mut population);
        population = merged;
        population.sort_by_key(|i| i.violations);
        population.truncate(cfg.population_size);

        let violations: Vec<usize> = population.iter().map(|i| i.violations).collect();
        observe(&GaStep {
            iteration,
            violations: &violations,
        });
        if population[0].violations == 0 {
            break;
        }
    }
    let best = &population[0];
    Ok(HeuristicOutcome::new(
        best.coloring.clone(),
        best.violations,
        iteration,
    ))
}
