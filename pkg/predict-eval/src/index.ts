export { buildDataset, parseLabels, parseMembership, nodeSortKey } from "./bundle.js";
export type { BundleOptions, Dataset } from "./bundle.js";
export { foldAssignment, trainBinaryRelevance } from "./brl.js";
export type { BaseLearner, BrlOptions, BrlResult } from "./brl.js";
export { decisionValue, predictLogistic, trainLogistic, DEFAULT_LOGISTIC } from "./logistic.js";
export type { LogisticOptions } from "./logistic.js";
export { baselineScores, scoreMultiLabel } from "./score.js";
export type { LabelScore, MultiLabelScores } from "./score.js";
export { formatReport } from "./report.js";
export { mulberry32, shuffleInPlace } from "./rng.js";
