/** Response documents of the analytics service. The UI renders these verbatim. */

export interface UserSummary {
  user_id: string;
  qualifying_day_count: number;
  record_count: number;
}

export interface PatternEntry {
  items: string[];
  support_count: number;
  support_ratio: number;
}

export interface PatternsDoc {
  user_id: string;
  min_support: number;
  mode: string;
  database_size: number;
  patterns: PatternEntry[];
}

export interface GraphNode {
  category: string;
  weight: number;
}

export interface GraphEdge {
  source: string;
  target: string;
  weight: number;
}

export interface GraphDoc {
  nodes: GraphNode[];
  edges: GraphEdge[];
  user_id?: string;
  min_support?: number;
}

export interface CellBounds {
  south: number;
  west: number;
  north: number;
  east: number;
}

export interface CrowdCell {
  cell_id: string;
  bounds: CellBounds;
  dominant_category: string | null;
  count: number;
  users?: string[];
}

export interface CrowdDoc {
  hour_slot: number;
  cells: CrowdCell[];
  min_support?: number;
  precision?: number;
}

export interface UploadResult {
  user_id: string;
  qualifying_day_count: number;
  warnings: string[];
}

export interface SweepEntry {
  min_support: number;
  mean_count: number | null;
  mean_avg_length: number | null;
  per_user_counts: Record<string, number>;
  per_user_avg_length: Record<string, number>;
  skipped_users: string[];
}
