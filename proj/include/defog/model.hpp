#pragma once

#include <optional>
#include <string>

#include "defog/adam.hpp"
#include "defog/baselines.hpp"
#include "defog/checkpoint.hpp"
#include "defog/nn.hpp"
#include "defog/sample.hpp"
#include "defog/tape.hpp"

namespace defog {

enum class EncoderKind { kConv, kConvLSTM };
enum class BlockKind { kBasic, kGated, kResidual };

struct ModelConfig {
  EncoderKind encoder = EncoderKind::kConvLSTM;
  int depth = 4;  // conv layer count, 4 or 9
  BlockKind block = BlockKind::kBasic;
  int conv_channels = 32;     // width of every conv layer
  int embed_channels = 64;    // F_E: latent embedding and all LSTM hidden sizes
  int terrain_channels = 8;   // F_T
  int faction_channels = 8;   // F_F, split between the two players
  int kernel = 3;             // stride-1 convs
  int down_kernel = 2;        // stride-2 downsampling convs
  Nonlinearity nonlin = Nonlinearity::kElu;
  bool predict_delta = true;
  float huber_delta = 1.0f;
  float lambda_global = 1.0f;  // classification head weight in the loss
  float lr = 1e-4f;
  GridSpec spec;
  double horizon = 15;
  int num_types = 6;
  int num_factions = 3;

  int input_channels() const {
    return 2 * num_types + terrain_channels + faction_channels;
  }
  int num_blocks() const { return depth >= 9 ? 2 : 1; }  // CL encoder blocks
};

const char* encoder_name(EncoderKind k);
const char* block_name(BlockKind k);
EncoderKind encoder_from_name(const std::string& name);
BlockKind block_from_name(const std::string& name);

// Widths used for the published parameter-count reference points.
ModelConfig paper_config(EncoderKind encoder, int depth);

template <class T>
class Defogger;

// Per-sequence forward results living on a tape.
template <class T>
struct ForwardResult {
  std::vector<typename Tape<T>::Id> y_hat;   // per step, [gh,gw,C_u], pre-clamp
  std::vector<typename Tape<T>::Id> logits;  // per step, [num_types]
  typename Tape<T>::Id loss = -1;
  std::vector<typename Tape<T>::Id> param_ids;  // aligned with the param store
};

template <class T>
class Defogger {
 public:
  Defogger(const ModelConfig& config, uint64_t init_seed);

  const ModelConfig& config() const { return config_; }
  ParamStore<T>& params() { return params_; }
  const ParamStore<T>& params() const { return params_; }
  size_t num_params() const { return params_.total_params(); }

  // Runs the whole sequence; recurrent state starts at zero and is carried
  // across steps on the tape. with_loss also attaches the training loss.
  ForwardResult<T> forward(Tape<T>& tape, const Sample& sample, bool with_loss) const;

  // Convenience: clamped count grids plus sigmoid global scores.
  SequencePrediction predict(const Sample& sample, const TechTree& tech) const;

  void load(const ParamStore<float>& loaded);
  ParamStore<float> snapshot() const { return params_.template cast<float>(); }

 private:
  struct TapeIds;  // per-tape parameter leaf ids
  typename Tape<T>::Id conv_block(Tape<T>& tape, typename Tape<T>::Id x, int layer,
                                  int stride, const TapeIds& ids) const;

  ModelConfig config_;
  ParamStore<T> params_;
};

// Encoder output spatial extent checks and parameter accounting use these.
int encoder_c_output_extent(int input_extent);

struct ModelCheckpoint {
  ModelConfig config;
  ParamStore<float> params;
};
void save_model(const ModelConfig& config, const ParamStore<float>& params,
                const std::string& path);
ModelCheckpoint load_model(const std::string& path);

struct TrainConfig {
  int max_steps = 2000;
  int valid_every = 100;
  uint64_t seed = 1;
  // Optional early stop once validation op_u F1 reaches this level.
  float early_stop_f1 = -1.f;
  std::string log_path;
};

struct TrainResult {
  ParamStore<float> best_params;   // best validation Huber
  ParamStore<float> final_params;
  float best_valid_huber = 0;
  float best_valid_f1 = 0;
  std::vector<std::pair<int, float>> loss_curve;  // (step, train loss)
  bool diverged = false;
  int steps_run = 0;
};

TrainResult train_model(const ModelConfig& config, const TechTree& tech,
                        const std::vector<Sample>& train_samples,
                        const std::vector<Sample>& valid_samples,
                        const TrainConfig& train_config);

extern template class Defogger<float>;
extern template class Defogger<double>;

}  // namespace defog
