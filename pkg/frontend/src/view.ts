/** Pure HTML renderers over API payloads.
 *
 * The view never re-sorts, filters or re-scores: result cards are built
 * strictly in API order and display the payload's values verbatim
 * (scores to four decimals). Everything here returns strings so it can
 * be tested against recorded fixtures without a DOM.
 */

import { escapeHtml, highlightSegments, type Segment } from "./highlight.js";
import type {
  ApiSearchResult,
  MatchedTerm,
  QueryTag,
  ReportDetail,
  SearchResponse,
} from "./types.js";

export interface ResultViewModel {
  id: string;
  scoreText: string;
  scorePercent: number;
  segments: Segment[];
  verdict: string;
  matchedTerms: MatchedTerm[];
}

export function buildViewModel(result: ApiSearchResult): ResultViewModel {
  return {
    id: result.id,
    scoreText: result.score.toFixed(4),
    scorePercent: Math.max(0, Math.min(100, result.score * 100)),
    segments: highlightSegments(result.head, result.matched_terms.map((m) => m.term)),
    verdict: result.verdict,
    matchedTerms: result.matched_terms,
  };
}

export function renderHead(segments: Segment[]): string {
  return segments
    .map((s) => (s.marked ? `<mark>${escapeHtml(s.text)}</mark>` : escapeHtml(s.text)))
    .join("");
}

function renderTermTable(terms: MatchedTerm[]): string {
  const rows = terms
    .map(
      (m) =>
        `<tr><td class="term">${escapeHtml(m.term)}</td>` +
        `<td>${m.query_weight.toFixed(4)}</td>` +
        `<td>${m.doc_weight.toFixed(4)}</td>` +
        `<td>${m.contribution.toFixed(4)}</td></tr>`,
    )
    .join("");
  return (
    '<table class="term-table"><thead><tr>' +
    "<th>term</th><th>query</th><th>report</th><th>contribution</th>" +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderCard(vm: ResultViewModel, rank: number): string {
  const verdict = vm.verdict
    ? escapeHtml(vm.verdict)
    : '<em class="muted">no verdict recorded</em>';
  return (
    `<article class="card" data-id="${escapeHtml(vm.id)}">` +
    `<header><span class="rank">#${rank}</span>` +
    `<h3>${escapeHtml(vm.id)}</h3>` +
    `<span class="score" title="cosine similarity">${vm.scoreText}</span></header>` +
    `<div class="score-bar"><div class="score-fill" style="width:${vm.scorePercent}%"></div></div>` +
    `<p class="head">${renderHead(vm.segments)}</p>` +
    `<details class="terms"><summary>matched terms (${vm.matchedTerms.length})</summary>` +
    renderTermTable(vm.matchedTerms) +
    "</details>" +
    `<footer class="verdict"><span class="label">verdict</span><span class="verdict-text">${verdict}</span></footer>` +
    "</article>"
  );
}

export function renderResults(response: SearchResponse): string {
  if (response.empty_query) {
    return (
      '<div class="notice" data-state="empty-query">No searchable terms in the query ' +
      "(only stop words or words outside the mined vocabulary). Try adding content words.</div>"
    );
  }
  if (response.results.length === 0) {
    return '<div class="notice" data-state="no-matches">No matching law reports.</div>';
  }
  return response.results.map((r, i) => renderCard(buildViewModel(r), i + 1)).join("\n");
}

export function renderTags(tags: QueryTag[]): string {
  if (tags.length === 0) return "";
  const lines = tags.map((t) => escapeHtml(`${t.surface}/${t.pos}/${t.chunk}`)).join("\n");
  return `<pre class="tag-lines">${lines}</pre>`;
}

export function renderDetail(report: ReportDetail): string {
  const detail = report.detail
    ? escapeHtml(report.detail)
    : '<em class="muted">full text not available on this server</em>';
  const verdict = report.verdict
    ? escapeHtml(report.verdict)
    : '<em class="muted">no verdict recorded</em>';
  return (
    `<h2>${escapeHtml(report.id)}</h2>` +
    `<p class="head">${escapeHtml(report.head)}</p>` +
    `<div class="detail-body">${detail}</div>` +
    `<footer class="verdict"><span class="label">verdict</span><span class="verdict-text">${verdict}</span></footer>`
  );
}

export function renderBanner(message: string): string {
  return `<div class="banner">${escapeHtml(message)}</div>`;
}
