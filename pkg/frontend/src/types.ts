/** Wire types of the search service; field names match the JSON exactly. */

export interface MatchedTerm {
  term: string;
  query_weight: number;
  doc_weight: number;
  contribution: number;
}

export interface ApiSearchResult {
  id: string;
  score: number;
  head: string;
  verdict: string;
  matched_terms: MatchedTerm[];
}

export interface QueryTag {
  surface: string;
  pos: string;
  chunk: string;
}

export interface SearchResponse {
  results: ApiSearchResult[];
  empty_query: boolean;
  query_tags: QueryTag[];
}

export interface ReportDetail {
  id: string;
  head: string;
  detail: string;
  verdict: string;
}

export interface HealthInfo {
  status: string;
  n_docs: number;
  vocabulary_size: number;
}
