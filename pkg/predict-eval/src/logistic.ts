/**
 * Binary logistic regression on sparse binary features, trained with
 * full-batch gradient descent.  No randomness anywhere: weights start at
 * zero and the data order does not matter because the gradient is summed
 * over all examples before any update.
 */

export interface LogisticOptions {
  epochs: number;
  learningRate: number;
  l2: number;
}

export const DEFAULT_LOGISTIC: LogisticOptions = {
  epochs: 200,
  learningRate: 0.5,
  l2: 1e-3,
};

function sigmoid(z: number): number {
  return z >= 0 ? 1 / (1 + Math.exp(-z)) : Math.exp(z) / (1 + Math.exp(z));
}

/** Returns `dim` feature weights followed by the bias term. */
export function trainLogistic(
  features: Array<Set<number>>,
  targets: boolean[],
  dim: number,
  options: LogisticOptions = DEFAULT_LOGISTIC
): Float64Array {
  if (features.length !== targets.length) {
    throw new Error("features and targets must align");
  }
  const weights = new Float64Array(dim + 1);
  const gradient = new Float64Array(dim + 1);
  const n = features.length;
  for (let epoch = 0; epoch < options.epochs; epoch += 1) {
    gradient.fill(0);
    for (let i = 0; i < n; i += 1) {
      let z = weights[dim]!;
      for (const j of features[i]!) z += weights[j]!;
      const err = sigmoid(z) - (targets[i] ? 1 : 0);
      for (const j of features[i]!) gradient[j]! += err;
      gradient[dim]! += err;
    }
    const step = options.learningRate;
    for (let j = 0; j <= dim; j += 1) {
      const l2 = j < dim ? options.l2 * weights[j]! : 0; // bias unpenalized
      weights[j]! -= step * (gradient[j]! / n + l2);
    }
  }
  return weights;
}

export function decisionValue(weights: Float64Array, x: Set<number>): number {
  let z = weights[weights.length - 1]!;
  for (const j of x) z += weights[j]!;
  return z;
}

export function predictLogistic(weights: Float64Array, x: Set<number>): boolean {
  return decisionValue(weights, x) > 0;
}
