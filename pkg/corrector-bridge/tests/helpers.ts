/**
 * Test helpers: a tiny in-test trainer that writes NGRAM v1 files the same
 * way the primary component does (padded counting, escaped sorted records),
 * so unit tests stay hermetic while exercising the real file format.
 */
import { mkdtempSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import { CharNGramModel, PAD } from '../src/model.js';

const ESCAPES: Record<string, string> = {
  '\\': '\\\\',
  '\t': '\\t',
  '\n': '\\n',
  '\r': '\\r',
  [PAD]: '\\0',
};

export function escapeGram(gram: string): string {
  let out = '';
  for (const ch of gram) {
    out += ESCAPES[ch] ?? ch;
  }
  return out;
}

/** Count padded n-grams over documents, mirroring the trainer. */
export function countGrams(docs: string[], order: number): Map<string, number> {
  const counts = new Map<string, number>();
  for (const doc of docs) {
    if (doc === '') {
      continue;
    }
    const padded = Array.from(PAD.repeat(order - 1) + doc);
    for (let i = order - 1; i < padded.length; i++) {
      const gram = padded.slice(i - order + 1, i + 1).join('');
      counts.set(gram, (counts.get(gram) ?? 0) + 1);
    }
  }
  return counts;
}

export function modelFileContent(docs: string[], order: number, k: string): string {
  const counts = countGrams(docs, order);
  const lines = [`NGRAM v1 n=${order} k=${k}`];
  for (const gram of [...counts.keys()].sort()) {
    lines.push(`${escapeGram(gram)}\t${counts.get(gram)}`);
  }
  return `${lines.join('\n')}\n`;
}

export function writeTempModel(content: string): string {
  const dir = mkdtempSync(join(tmpdir(), 'bridge-test-'));
  const path = join(dir, 'model.ngram');
  writeFileSync(path, content, 'utf-8');
  return path;
}

export function trainModel(docs: string[], order: number, k = '0.01'): CharNGramModel {
  return CharNGramModel.load(writeTempModel(modelFileContent(docs, order, k)));
}
