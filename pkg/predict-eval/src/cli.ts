#!/usr/bin/env node
/**
 * Score a community-membership bundle as features for multilabel node
 * classification.
 *
 *   predict-eval --membership membership.txt --labels labels.txt \
 *       [--folds 5] [--seed 7] [--min-community-size N] [--drop-uncovered] \
 *       [--out report.txt]
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { trainBinaryRelevance } from "./brl.js";
import { buildDataset } from "./bundle.js";
import { formatReport } from "./report.js";
import { scoreMultiLabel } from "./score.js";

export function run(argv: string[]): number {
  const { values } = parseArgs({
    args: argv,
    options: {
      membership: { type: "string" },
      labels: { type: "string" },
      folds: { type: "string", default: "5" },
      seed: { type: "string", default: "7" },
      learner: { type: "string", default: "logistic" },
      "min-community-size": { type: "string", default: "1" },
      "drop-uncovered": { type: "boolean", default: false },
      out: { type: "string" },
    },
  });
  if (!values.membership || !values.labels) {
    process.stderr.write("predict-eval: --membership and --labels are required\n");
    return 1;
  }
  const dataset = buildDataset(
    readFileSync(values.membership, "utf-8"),
    readFileSync(values.labels, "utf-8"),
    {
      minCommunitySize: Number(values["min-community-size"]),
      dropUncovered: values["drop-uncovered"] as boolean,
    }
  );
  const folds = Number(values.folds);
  const seed = Number(values.seed);
  const learner = values.learner as string;
  if (learner !== "logistic" && learner !== "prior") {
    process.stderr.write(`predict-eval: unknown learner ${learner}\n`);
    return 1;
  }
  const result = trainBinaryRelevance(dataset, { folds, seed, learner });
  const scores = scoreMultiLabel(result.predictions, dataset.labels);
  const report = formatReport(scores, {
    folds,
    seed,
    flaggedLabels: result.flaggedLabels,
    examples: dataset.nodes.length,
    features: dataset.featureCount,
    droppedUncovered: dataset.droppedUncovered,
  });
  if (values.out) writeFileSync(values.out, report);
  process.stdout.write(report);
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
