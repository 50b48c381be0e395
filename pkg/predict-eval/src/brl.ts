/**
 * Binary relevance over the label universe: one independent binary
 * classifier per label, evaluated with seeded k-fold cross-validation.
 * Each example's predicted label set is the union of the per-label
 * positives produced by the fold model that held it out.
 */

import { Dataset } from "./bundle.js";
import {
  DEFAULT_LOGISTIC,
  LogisticOptions,
  predictLogistic,
  trainLogistic,
} from "./logistic.js";
import { mulberry32, shuffleInPlace } from "./rng.js";

/** Base binary learner: feature-driven logistic, or the label-prior stub. */
export type BaseLearner = "logistic" | "prior";

export interface BrlOptions {
  folds: number;
  seed: number;
  learner?: BaseLearner;
  logistic?: LogisticOptions;
}

export interface BrlResult {
  predictions: Array<Set<string>>;
  /** labels carrying a single class over all examples; scored always-negative */
  flaggedLabels: string[];
}

/** Fold id per example: seeded shuffle, then round-robin assignment. */
export function foldAssignment(n: number, folds: number, seed: number): number[] {
  const order = Array.from({ length: n }, (_, i) => i);
  shuffleInPlace(order, mulberry32(seed));
  const fold = new Array<number>(n);
  order.forEach((example, position) => {
    fold[example] = position % folds;
  });
  return fold;
}

export function trainBinaryRelevance(data: Dataset, options: BrlOptions): BrlResult {
  const n = data.features.length;
  if (options.folds < 2) throw new Error("need at least 2 folds");
  if (n < options.folds) throw new Error("need at least one example per fold");

  const folds = foldAssignment(n, options.folds, options.seed);
  const predictions: Array<Set<string>> = Array.from({ length: n }, () => new Set());
  const flagged: string[] = [];

  for (const label of data.labelUniverse) {
    const y = data.labels.map((ls) => ls.has(label));
    const positives = y.filter(Boolean).length;
    if (positives === 0 || positives === n) {
      flagged.push(label); // degenerate: no signal to fit, treat as never-predicted
      continue;
    }
    for (let f = 0; f < options.folds; f += 1) {
      const trainX: Array<Set<number>> = [];
      const trainY: boolean[] = [];
      for (let i = 0; i < n; i += 1) {
        if (folds[i] !== f) {
          trainX.push(data.features[i]!);
          trainY.push(y[i]!);
        }
      }
      const trainPositives = trainY.filter(Boolean).length;
      let constant: boolean | null = null;
      if (trainPositives === 0) constant = false;
      else if (trainPositives === trainY.length) constant = true;
      else if ((options.learner ?? "logistic") === "prior") {
        constant = trainPositives > trainY.length / 2;
      }
      const weights =
        constant === null
          ? trainLogistic(trainX, trainY, data.featureCount, options.logistic ?? DEFAULT_LOGISTIC)
          : null;
      for (let i = 0; i < n; i += 1) {
        if (folds[i] !== f) continue;
        const positive =
          constant !== null ? constant : predictLogistic(weights!, data.features[i]!);
        if (positive) predictions[i]!.add(label);
      }
    }
  }
  return { predictions, flaggedLabels: flagged };
}
