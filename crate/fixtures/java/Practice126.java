// Practice problem
import java.util.Scanner;

public class Practice126 {
  public static double computeAverage(int[] values) {
    double total = 0;
    for (int v : values) {
      total = total + v;
    }
    return total / values.length;
  }

  static int findMax(int[] values) {
    int best = values[0];
    for (int i = 1; i < values.length; i++) {
      if (values[i] > best) {
        best = values[i];
      }
    }
    return best;
  }

  public static int abs(int n) {
    return n < 0 ? -n : n;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {3, 2, 7, 5, 5, 9, 1};
    double avg = computeAverage(numbers);
    System.out.println("Average: " + avg);
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    System.out.println(abs(-26));
    sc.close();
  }
}
