/**
 * Multilabel scoring: example-averaged precision and recall, with their
 * harmonic mean as the F measure.
 *
 *   precision = (1/N) sum |Y_i ∩ Z_i| / |Z_i|
 *   recall    = (1/N) sum |Y_i ∩ Z_i| / |Y_i|
 *
 * An empty prediction set contributes 0 to its precision term (the
 * harshest consistent convention); the count of such examples is reported.
 */

export interface LabelScore {
  precision: number;
  recall: number;
  f: number;
  support: number;
}

export interface MultiLabelScores {
  precision: number;
  recall: number;
  fMeasure: number;
  emptyPredictions: number;
  perLabel: Map<string, LabelScore>;
}

function intersectionSize(a: Set<string>, b: Set<string>): number {
  let size = 0;
  for (const x of a) if (b.has(x)) size += 1;
  return size;
}

function harmonic(p: number, r: number): number {
  return p + r > 0 ? (2 * p * r) / (p + r) : 0;
}

export function scoreMultiLabel(
  predicted: Array<Set<string>>,
  truth: Array<Set<string>>
): MultiLabelScores {
  if (predicted.length !== truth.length) {
    throw new Error("predicted and truth must have the same length");
  }
  const n = predicted.length;
  if (n === 0) throw new Error("cannot score an empty dataset");

  let precisionSum = 0;
  let recallSum = 0;
  let empty = 0;
  for (let i = 0; i < n; i += 1) {
    const z = predicted[i]!;
    const y = truth[i]!;
    const hit = intersectionSize(y, z);
    if (z.size === 0) empty += 1;
    else precisionSum += hit / z.size;
    if (y.size > 0) recallSum += hit / y.size;
  }
  const precision = precisionSum / n;
  const recall = recallSum / n;

  const labels = new Set<string>();
  for (const y of truth) for (const l of y) labels.add(l);
  const perLabel = new Map<string, LabelScore>();
  for (const label of [...labels].sort()) {
    let tp = 0;
    let fp = 0;
    let fn = 0;
    for (let i = 0; i < n; i += 1) {
      const inY = truth[i]!.has(label);
      const inZ = predicted[i]!.has(label);
      if (inY && inZ) tp += 1;
      else if (!inY && inZ) fp += 1;
      else if (inY && !inZ) fn += 1;
    }
    const p = tp + fp > 0 ? tp / (tp + fp) : 0;
    const r = tp + fn > 0 ? tp / (tp + fn) : 0;
    perLabel.set(label, { precision: p, recall: r, f: harmonic(p, r), support: tp + fn });
  }

  return {
    precision,
    recall,
    fMeasure: harmonic(precision, recall),
    emptyPredictions: empty,
    perLabel,
  };
}

/**
 * Score of the label-prior predictor: predict a label for every example
 * exactly when more than half the examples carry it.  This is the base
 * rate a feature-blind learner converges to.
 */
export function baselineScores(
  truth: Array<Set<string>>,
  labelUniverse: string[]
): MultiLabelScores {
  const n = truth.length;
  const always = new Set<string>();
  for (const label of labelUniverse) {
    let count = 0;
    for (const y of truth) if (y.has(label)) count += 1;
    if (count > n / 2) always.add(label);
  }
  const predicted = truth.map(() => new Set(always));
  return scoreMultiLabel(predicted, truth);
}
