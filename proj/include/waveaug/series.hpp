#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace waveaug {

/// A (rows x time x channels) block of real values. Each row is stored as a
/// column-major (time x channels) matrix so that one channel of one row is a
/// contiguous slice.
class SeriesTensor {
public:
    SeriesTensor() = default;
    SeriesTensor(Eigen::Index rows, Eigen::Index time, Eigen::Index channels)
        : rows_(rows), time_(time), channels_(channels),
          data_(Eigen::VectorXd::Zero(rows * time * channels)) {}

    Eigen::Index rows() const { return rows_; }
    Eigen::Index time() const { return time_; }
    Eigen::Index channels() const { return channels_; }

    Eigen::Map<Eigen::MatrixXd> row(Eigen::Index r) {
        return {data_.data() + r * time_ * channels_, time_, channels_};
    }
    Eigen::Map<const Eigen::MatrixXd> row(Eigen::Index r) const {
        return {data_.data() + r * time_ * channels_, time_, channels_};
    }

    Eigen::Map<Eigen::VectorXd> channel(Eigen::Index r, Eigen::Index c) {
        return {data_.data() + (r * channels_ + c) * time_, time_};
    }
    Eigen::Map<const Eigen::VectorXd> channel(Eigen::Index r, Eigen::Index c) const {
        return {data_.data() + (r * channels_ + c) * time_, time_};
    }

    double& operator()(Eigen::Index r, Eigen::Index t, Eigen::Index c) {
        return data_[(r * channels_ + c) * time_ + t];
    }
    double operator()(Eigen::Index r, Eigen::Index t, Eigen::Index c) const {
        return data_[(r * channels_ + c) * time_ + t];
    }

    const Eigen::VectorXd& flat() const { return data_; }

    bool same_shape(const SeriesTensor& o) const {
        return rows_ == o.rows_ && time_ == o.time_ && channels_ == o.channels_;
    }

    /// Concatenates along the time axis (rows and channels must match).
    static SeriesTensor concat_time(const SeriesTensor& a, const SeriesTensor& b) {
        if (a.rows() != b.rows() || a.channels() != b.channels())
            throw std::invalid_argument("concat_time: row/channel mismatch");
        SeriesTensor out(a.rows(), a.time() + b.time(), a.channels());
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.channels(); ++c) {
                out.channel(r, c).head(a.time()) = a.channel(r, c);
                out.channel(r, c).tail(b.time()) = b.channel(r, c);
            }
        return out;
    }

    /// Splits along the time axis at t_split into (head, tail).
    std::pair<SeriesTensor, SeriesTensor> split_time(Eigen::Index t_split) const {
        if (t_split < 0 || t_split > time_)
            throw std::invalid_argument("split_time: bad split point");
        SeriesTensor head(rows_, t_split, channels_);
        SeriesTensor tail(rows_, time_ - t_split, channels_);
        for (Eigen::Index r = 0; r < rows_; ++r)
            for (Eigen::Index c = 0; c < channels_; ++c) {
                head.channel(r, c) = channel(r, c).head(t_split);
                tail.channel(r, c) = channel(r, c).tail(time_ - t_split);
            }
        return {std::move(head), std::move(tail)};
    }

    /// Stacks selected rows into a new tensor.
    SeriesTensor select_rows(const std::vector<Eigen::Index>& idx) const {
        SeriesTensor out(static_cast<Eigen::Index>(idx.size()), time_, channels_);
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            out.row(i) = row(idx[static_cast<size_t>(i)]);
        return out;
    }

    static SeriesTensor concat_rows(const SeriesTensor& a, const SeriesTensor& b) {
        if (a.time() != b.time() || a.channels() != b.channels())
            throw std::invalid_argument("concat_rows: shape mismatch");
        SeriesTensor out(a.rows() + b.rows(), a.time(), a.channels());
        for (Eigen::Index r = 0; r < a.rows(); ++r) out.row(r) = a.row(r);
        for (Eigen::Index r = 0; r < b.rows(); ++r) out.row(a.rows() + r) = b.row(r);
        return out;
    }

private:
    Eigen::Index rows_ = 0, time_ = 0, channels_ = 0;
    Eigen::VectorXd data_;
};

}  // namespace waveaug
