import { MultiLabelScores } from "./score.js";

export interface ReportExtras {
  folds?: number;
  seed?: number;
  flaggedLabels?: string[];
  examples?: number;
  features?: number;
  droppedUncovered?: number;
}

/** Key/value text report, one `key value` pair per line. */
export function formatReport(scores: MultiLabelScores, extras: ReportExtras = {}): string {
  const lines: string[] = [
    `precision ${scores.precision}`,
    `recall ${scores.recall}`,
    `f_measure ${scores.fMeasure}`,
    `empty_predictions ${scores.emptyPredictions}`,
  ];
  if (extras.examples !== undefined) lines.push(`examples ${extras.examples}`);
  if (extras.features !== undefined) lines.push(`features ${extras.features}`);
  if (extras.droppedUncovered !== undefined) {
    lines.push(`dropped_uncovered ${extras.droppedUncovered}`);
  }
  if (extras.folds !== undefined) lines.push(`folds ${extras.folds}`);
  if (extras.seed !== undefined) lines.push(`seed ${extras.seed}`);
  if (extras.flaggedLabels !== undefined) {
    lines.push(`flagged_labels ${extras.flaggedLabels.length}`);
    for (const label of extras.flaggedLabels) lines.push(`flagged ${label}`);
  }
  for (const [label, s] of scores.perLabel) {
    lines.push(`label_f ${label} ${s.f}`);
  }
  return lines.join("\n") + "\n";
}
